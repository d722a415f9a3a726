#include "uniratio/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <variant>

#include "uniratio/finite_oracle.hpp"
#include "uniratio/json_io.hpp"
#include "uniratio/named_families.hpp"

namespace uniratio {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int thread_cap(std::size_t jobs) {
    unsigned cap = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("UNIRATIO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        cap = (v <= 1) ? 1u : static_cast<unsigned>(v);
    }
    if (cap == 0) cap = 1;
    return static_cast<int>(std::min<std::size_t>(cap, jobs));
}

/// Runs fn(i) for i in [0, jobs) on up to UNIRATIO_THREADS workers; results
/// are indexed, so output order never depends on scheduling.
void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    const int workers = thread_cap(jobs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

// A report as named columns; renders as CSV ('.' decimals, LF endings,
// 17 significant digits, '#' metadata lines) or as a JSON array of rows.
struct Cell {
    std::variant<std::monostate, long long, double, bool, std::string> value;

    Cell() = default;
    Cell(long long v) : value(v) {}
    Cell(int v) : value(static_cast<long long>(v)) {}
    Cell(double v) : value(v) {}
    Cell(bool v) : value(v) {}
    Cell(std::string v) : value(std::move(v)) {}
};

struct RowTable {
    std::vector<std::string> metadata;  // emitted as '# ...' comment lines
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void render(std::ostream& out, const std::string& format) const {
        if (format == "json") {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json obj;
                for (std::size_t i = 0; i < header.size(); ++i) {
                    const auto& v = row[i].value;
                    if (std::holds_alternative<std::monostate>(v)) {
                        obj[header[i]] = nullptr;
                    } else if (std::holds_alternative<long long>(v)) {
                        obj[header[i]] = std::get<long long>(v);
                    } else if (std::holds_alternative<double>(v)) {
                        obj[header[i]] = std::get<double>(v);
                    } else if (std::holds_alternative<bool>(v)) {
                        obj[header[i]] = std::get<bool>(v);
                    } else {
                        obj[header[i]] = std::get<std::string>(v);
                    }
                }
                doc.push_back(std::move(obj));
            }
            out << doc.dump() << "\n";
            return;
        }
        for (const auto& line : metadata) out << "# " << line << "\n";
        for (std::size_t i = 0; i < header.size(); ++i)
            out << header[i] << (i + 1 < header.size() ? "," : "");
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                const auto& v = row[i].value;
                if (std::holds_alternative<long long>(v)) {
                    out << std::get<long long>(v);
                } else if (std::holds_alternative<double>(v)) {
                    out << fmt(std::get<double>(v));
                } else if (std::holds_alternative<bool>(v)) {
                    out << (std::get<bool>(v) ? "true" : "false");
                } else if (std::holds_alternative<std::string>(v)) {
                    const auto& s = std::get<std::string>(v);
                    out << (s.find(',') == std::string::npos ? s : '"' + s + '"');
                }
                out << (i + 1 < row.size() ? "," : "");
            }
            out << "\n";
        }
    }
};

std::string table_format(const RunConfig& config) {
    if (config.format.empty() || config.format == "csv") return "csv";
    if (config.format == "json") return "json";
    throw SpecError("unknown format '" + config.format + "'");
}

struct ResolvedInput {
    bool is_pair = false;  // P/Q/R/S bivariate pair
    EnvelopePair pair;
    FamilySpec spec;  // valid when !is_pair
    std::string description;
};

ResolvedInput resolve_input(const RunConfig& config) {
    if (config.spec_arg.empty() == config.family_arg.empty())
        throw SpecError("provide exactly one of --spec or --family");
    ResolvedInput in;
    if (!config.spec_arg.empty()) {
        const auto j = load_json_argument(config.spec_arg);
        in.spec = spec_from_json(j);
        in.description = j.dump();
        return in;
    }
    const auto j = load_json_argument(config.family_arg);
    const FamilyParams params = family_from_json(j);
    in.description = j.dump();
    if (params.name == "H") {
        in.spec = h_family_spec(params.m);
    } else if (params.name == "T") {
        in.spec = t_family_spec(params.m);
    } else {
        in.is_pair = true;
        in.pair = table1_pair(params);
    }
    return in;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// ---------------------------------------------------------------------------

int cmd_limit_ratio(const RunConfig& config, std::ostream& out) {
    if (!config.format.empty() && config.format != "json")
        throw SpecError("limit-ratio emits a single JSON result; --format csv does not apply");
    const ResolvedInput in = resolve_input(config);

    LimitRatioResult result;
    std::optional<double> mahler;
    if (config.method == "exact") {
        result = in.is_pair ? limit_ratio_exact(in.pair) : limit_ratio_exact(in.spec);
        if (in.is_pair) mahler = mahler_limit(in.pair);
    } else if (config.method == "riemann") {
        const EnvelopePair pair = in.is_pair ? in.pair : EnvelopePair::from_spec(in.spec);
        result.method = RatioMethod::riemann;
        result.lc = limit_ratio_riemann(pair, config.points);
    } else {
        throw SpecError("unknown method '" + config.method + "'");
    }
    out << result_to_json(result, mahler).dump() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const ResolvedInput in = resolve_input(config);
    if (in.is_pair) throw SpecError("verify needs a spec-backed input (spec, H, or T)");
    if (config.n_list.empty()) throw SpecError("verify requires a nonempty --n-list");
    const FamilySpec& spec = in.spec;

    RowTable table;
    table.metadata = {"command: verify", "input: " + in.description};
    table.header = {"n", "degree", "C", "abs_err", "et_bound"};

    if (!spec.palindromic()) {
        table.metadata.push_back("mode: oracle-only (non-palindromic spec; exact path unavailable)");
        if (config.lc_ref) table.metadata.push_back("lc_ref: " + fmt(*config.lc_ref));
        bool unstable = false;
        for (int n : config.n_list) {
            std::vector<Cell> row{n, 2LL * n + 2LL * spec.l, Cell{}, Cell{}, Cell{}};
            try {
                const double c = c_ratio(spec, n);
                row[2] = Cell{c};
                if (config.lc_ref) row[3] = Cell{std::abs(c - *config.lc_ref)};
            } catch (const NumericError& e) {
                unstable = true;
                row[2] = Cell{std::string("unstable")};
                table.metadata.push_back("row n=" + std::to_string(n) + ": " + e.what());
            }
            table.rows.push_back(std::move(row));
        }
        table.render(out, table_format(config));
        return unstable ? 3 : 0;
    }

    const double lc = config.lc_ref ? *config.lc_ref : limit_ratio_exact(spec).lc;
    const ConvergenceReport report = convergence_report(spec, config.n_list, lc);
    table.metadata.push_back("lc: " + fmt(report.lc));
    table.metadata.push_back("r: " + std::to_string(report.r));
    table.metadata.push_back("D: " + fmt(report.D));
    bool violated = false;
    for (const auto& row : report.rows) {
        violated = violated || row.abs_err > row.et_bound;
        table.rows.push_back({row.n, row.degree, row.c_ratio, row.abs_err, row.et_bound});
    }
    if (violated) table.metadata.push_back("status: BOUND VIOLATED");
    table.render(out, table_format(config));
    return violated ? 3 : 0;
}

int cmd_table2(const RunConfig& config, std::ostream& out) {
    std::ifstream data(config.data_path);
    if (!data) throw SpecError("cannot open reference data '" + config.data_path + "'");

    struct Row {
        std::string label, family;
        int a = 0, b = 0, epsilon = 0;
        double measure = 0.0, lc = 0.0;
        bool supported = false;
        double computed_lc = 0.0, computed_measure = 0.0;
    };
    std::vector<Row> rows;
    std::string line;
    bool saw_header = false;
    while (std::getline(data, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {  // label,family,a,b,epsilon,measure,lc
            saw_header = true;
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 7) throw SpecError("malformed reference row: " + line);
        Row row;
        row.label = f[0];
        row.family = f[1];
        if (!row.family.empty()) {
            row.a = std::stoi(f[2]);
            row.b = std::stoi(f[3]);
            row.epsilon = f[4].empty() ? 0 : std::stoi(f[4]);
            row.supported = true;
        }
        row.measure = std::stod(f[5]);
        row.lc = std::stod(f[6]);
        rows.push_back(row);
    }

    parallel_for(rows.size(), [&rows](std::size_t i) {
        Row& row = rows[i];
        if (!row.supported) return;
        const FamilyParams params{row.family, row.a, row.b, row.epsilon, 0};
        const EnvelopePair pair = table1_pair(params);
        row.computed_lc = limit_ratio_exact(pair).lc;
        row.computed_measure = mahler_limit(pair);
    });

    RowTable table;
    table.metadata = {"command: table2"};
    table.header = {"label",       "paper_measure", "computed_measure", "paper_lc",
                    "computed_lc", "lc_abs_err",    "measure_abs_err",  "status"};
    for (const auto& row : rows) {
        if (row.supported) {
            table.rows.push_back({row.label, row.measure, row.computed_measure, row.lc,
                                  row.computed_lc, std::abs(row.computed_lc - row.lc),
                                  std::abs(row.computed_measure - row.measure),
                                  std::string("ok")});
        } else {
            table.rows.push_back({row.label, row.measure, Cell{}, row.lc, Cell{}, Cell{}, Cell{},
                                  std::string("skipped")});
        }
    }
    table.render(out, table_format(config));
    return 0;
}

int cmd_salem(const RunConfig& config, std::ostream& out) {
    int lo, hi;
    if (config.m_range) {
        lo = config.m_range->first;
        hi = config.m_range->second;
    } else if (config.m) {
        lo = hi = *config.m;
    } else {
        throw SpecError("salem requires --m or --m-range");
    }
    if (lo < 1 || hi < lo) throw SpecError("invalid m range");

    RowTable table;
    table.metadata = {"command: salem"};
    table.header = {"m", "b1", "b2", "lc", "alpha_residual", "beta_residual"};
    for (int m = lo; m <= hi; ++m) {
        const auto [b1, b2] = salem_power_coeffs(m);
        const LimitRatioResult res = limit_ratio_exact(t_family_spec(m));
        // closed forms: roots of the E(t) = +1 and E(t) = -1 quadratics in cos t
        const double cos_alpha = (-static_cast<double>(b1) -
                                  std::sqrt(static_cast<double>(b1) * static_cast<double>(b1) -
                                            4.0 * static_cast<double>(b2) + 12.0)) /
                                 4.0;
        const double cos_beta = (-static_cast<double>(b1) -
                                 std::sqrt(static_cast<double>(b1) * static_cast<double>(b1) -
                                           4.0 * static_cast<double>(b2) + 4.0)) /
                                4.0;
        double ra = 2.0, rb = 2.0;
        for (double c : res.crossings) {
            ra = std::min(ra, std::abs(std::cos(c) - cos_alpha));
            rb = std::min(rb, std::abs(std::cos(c) - cos_beta));
        }
        table.rows.push_back({m, b1, b2, res.lc, ra, rb});
    }
    table.render(out, table_format(config));
    return 0;
}

int cmd_hbounds(const RunConfig& config, std::ostream& out) {
    if (!config.m_range) throw SpecError("hbounds requires --m-range");
    const auto [lo, hi] = *config.m_range;
    if (lo < 2 || hi < lo) throw SpecError("hbounds requires 2 <= lo <= hi");

    std::vector<int> ms;
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
    if (ms.back() != 200) ms.push_back(200);  // conjecture check row

    struct Row {
        double lower, upper, lc;
    };
    std::vector<Row> rows(ms.size());
    parallel_for(ms.size(), [&](std::size_t i) {
        const auto [lower, upper] = hbounds(ms[i]);
        rows[i] = Row{lower, upper, limit_ratio_exact(h_family_spec(ms[i])).lc};
    });

    RowTable table;
    table.metadata = {"command: hbounds"};
    table.header = {"m", "lower", "upper", "lc", "inside_bounds", "conj_abs_err"};
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& [lower, upper, lc] = rows[i];
        std::vector<Cell> row{ms[i], lower, upper, lc, lower < lc && lc < upper, Cell{}};
        if (ms[i] == 200) row[5] = Cell{std::abs(lc - 0.209)};
        table.rows.push_back(std::move(row));
    }
    table.render(out, table_format(config));
    return 0;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        if (config.command == "limit-ratio") return cmd_limit_ratio(config, out);
        if (config.command == "verify") return cmd_verify(config, out);
        if (config.command == "table2") return cmd_table2(config, out);
        if (config.command == "salem") return cmd_salem(config, out);
        if (config.command == "hbounds") return cmd_hbounds(config, out);
        throw SpecError("unknown command '" + config.command + "'");
    } catch (const DegenerateEnvelopeError& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        diag << "error: " << e.what() << "\n";
        return 3;
    } catch (const SpecError& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace uniratio
