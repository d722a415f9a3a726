#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "uniratio/commands.hpp"

namespace {

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) throw CLI::ValidationError("--m-range expects the form a..b");
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

void add_common(CLI::App* cmd, uniratio::RunConfig& config, std::string& out_path) {
    cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
    cmd->add_option("--format", config.format, "output format (json|csv)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"limit ratios of nonunimodular roots of reciprocal polynomial sequences"};
    app.require_subcommand(1);

    uniratio::RunConfig config;
    std::string out_path;
    std::string n_list_text, m_range_text;
    int m_value = -1;
    double lc_ref = 0.0;

    auto* limit = app.add_subcommand("limit-ratio", "exact or sampled limit ratio");
    limit->add_option("--spec", config.spec_arg, "spec JSON (inline or path)");
    limit->add_option("--family", config.family_arg, "family JSON (inline or path)");
    limit->add_option("--method", config.method, "exact|riemann")->default_val("exact");
    limit->add_option("--points", config.points, "Riemann sample count")->default_val(1000000);
    add_common(limit, config, out_path);

    auto* verify = app.add_subcommand("verify", "finite-oracle convergence report");
    verify->add_option("--spec", config.spec_arg, "spec JSON (inline or path)");
    verify->add_option("--family", config.family_arg, "family JSON (inline or path)");
    verify->add_option("--n-list", n_list_text, "comma-separated expansion parameters")
        ->required();
    verify->add_option("--lc", lc_ref, "reference limit for oracle-only mode");
    add_common(verify, config, out_path);

    auto* table2 = app.add_subcommand("table2", "reproduce the bivariate reference table");
    table2->add_option("--data", config.data_path, "reference CSV path")
        ->default_val("data/table2_reference.csv");
    add_common(table2, config, out_path);

    auto* salem = app.add_subcommand("salem", "Salem-power family report");
    salem->add_option("--m", m_value, "single power m");
    salem->add_option("--m-range", m_range_text, "range a..b");
    add_common(salem, config, out_path);

    auto* hb = app.add_subcommand("hbounds", "analytic bounds for the all-ones family");
    hb->add_option("--m-range", m_range_text, "range a..b")->required();
    add_common(hb, config, out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!n_list_text.empty()) config.n_list = parse_n_list(n_list_text);
        if (!m_range_text.empty()) config.m_range = parse_range(m_range_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (m_value >= 0) config.m = m_value;
    if (verify->count("--lc") > 0) config.lc_ref = lc_ref;

    for (auto* sub : {limit, verify, table2, salem, hb}) {
        if (sub->parsed()) config.command = sub->get_name();
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output path '" << out_path << "'\n";
            return 1;
        }
        return uniratio::run_command(config, out, std::cerr);
    }
    return uniratio::run_command(config, std::cout, std::cerr);
}
