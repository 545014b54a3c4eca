// pexeq command line: every subcommand is a thin shell over the shared
// library's C API; all output is JSONL (default) or TSV, bit-identical for
// identical argv.

#include "pexeq/pexeq.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

int status_to_exit(pexeq_status status) {
    switch (status) {
        case PEXEQ_OK: return 0;
        case PEXEQ_INVALID_ARGUMENT: return 2;
        default: return 1;
    }
}

int fail(pexeq_status status) {
    std::cerr << "pexeq: " << pexeq_last_error() << "\n";
    return status_to_exit(status);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    pexeq_string_free(s);
    return out;
}

bool write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return true;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "pexeq: cannot open " << out_path << "\n";
        return false;
    }
    file << payload;
    return file.good();
}

std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> rows;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (end > start) rows.push_back(json::parse(text.substr(start, end - start)));
        start = end + 1;
    }
    return rows;
}

std::string solutions_field(const json& solutions) {
    std::string out;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(solutions[i][0].get<unsigned long>()) + "," +
               std::to_string(solutions[i][1].get<unsigned long>()) + "," +
               std::to_string(solutions[i][2].get<unsigned long>());
    }
    return out;
}

std::string solve_rows_tsv(const std::string& jsonl) {
    std::string out = "x\ty\tz\tvalue\n";
    for (const json& row : parse_jsonl(jsonl)) {
        out += std::to_string(row["x"].get<unsigned long>()) + "\t" +
               std::to_string(row["y"].get<unsigned long>()) + "\t" +
               std::to_string(row["z"].get<unsigned long>()) + "\t" +
               row["value"].get<std::string>() + "\n";
    }
    return out;
}

std::string scan_schema_rows_tsv(const std::string& jsonl) {
    std::string out = "a\tb\tc\tH\tN\tsolutions\texceptional\n";
    for (const json& row : parse_jsonl(jsonl)) {
        out += row["a"].dump() + "\t" + row["b"].dump() + "\t" + row["c"].dump() + "\t" +
               row["H"].get<std::string>() + "\t" + row["N"].dump() + "\t" +
               solutions_field(row["solutions"]) + "\t" +
               (row["exceptional"].get<bool>() ? "true" : "false") + "\n";
    }
    return out;
}

std::string system_rows_tsv(const std::string& jsonl) {
    std::string out = "a\tb\tc\tz\tZ\n";
    for (const json& row : parse_jsonl(jsonl)) {
        out += row["a"].get<std::string>() + "\t" + row["b"].get<std::string>() + "\t" +
               row["c"].get<std::string>() + "\t" + row["z"].dump() + "\t" +
               row["Z"].dump() + "\n";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for purely exponential equations a^x + b^y = c^z"};
    app.require_subcommand(1);

    std::string a, b, c, height, out_path, format = "jsonl";
    unsigned long r_max = 20, z_max = 40, a_max_ul = 0, b_max_ul = 0, c_max_ul = 0;
    std::string sys_a_max = "10000";
    unsigned long r_scan = 10000, oracle_c_max = 200;
    unsigned workers = 1;
    bool allow_pp = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"jsonl", "tsv"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* solve = app.add_subcommand("solve", "enumerate solutions of a fixed triple");
    solve->add_option("--a", a)->required();
    solve->add_option("--b", b)->required();
    solve->add_option("--c", c)->required();
    solve->add_option("--height", height, "bound on c^z: decimal, B^K or c^K")->required();
    add_format(solve);

    CLI::App* count = app.add_subcommand("count", "count solutions of a fixed triple");
    count->add_option("--a", a)->required();
    count->add_option("--b", b)->required();
    count->add_option("--c", c)->required();
    count->add_option("--height", height)->required();
    add_format(count);

    CLI::App* scan = app.add_subcommand("scan", "census of multi-solution triples");
    scan->add_option("--a-max", a_max_ul)->required();
    scan->add_option("--b-max", b_max_ul)->required();
    scan->add_option("--c-max", c_max_ul)->required();
    scan->add_option("--height", height)->required();
    scan->add_flag("--allow-perfect-powers", allow_pp,
                   "include bases m^k (skipped by default)");
    scan->add_option("--workers", workers);
    add_format(scan);

    CLI::App* exceptional =
        app.add_subcommand("exceptional", "verify the known multi-solution set");
    exceptional->add_option("--r-max", r_max)->required();
    exceptional->add_option("--height", height, "height bound or 'auto'")->required();
    add_format(exceptional);

    CLI::App* system_cmd =
        app.add_subcommand("system", "search the system a^2+b = c^z, a+b^2 = c^Z");
    system_cmd->add_option("--c", c)->required();
    system_cmd->add_option("--a-max", sys_a_max);
    system_cmd->add_option("--z-max", z_max);
    add_format(system_cmd);

    CLI::App* certify =
        app.add_subcommand("certify", "emit the case-analysis certificate for the system");
    certify->add_option("--r-scan", r_scan);
    certify->add_option("--oracle-c-max", oracle_c_max);
    certify->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << "pexeq: " << e.what() << "\n";
        return 2;
    }

    char* raw = nullptr;

    if (solve->parsed()) {
        pexeq_status status = pexeq_solve(a.c_str(), b.c_str(), c.c_str(), height.c_str(), &raw);
        if (status != PEXEQ_OK) return fail(status);
        std::string rows = take(raw);
        return write_output(format == "tsv" ? solve_rows_tsv(rows) : rows, out_path) ? 0 : 1;
    }

    if (count->parsed()) {
        pexeq_status status = pexeq_count(a.c_str(), b.c_str(), c.c_str(), height.c_str(), &raw);
        if (status != PEXEQ_OK) return fail(status);
        std::string row = take(raw);
        if (format == "tsv") {
            row = json::parse(row)["count"].dump() + "\n";
        }
        return write_output(row, out_path) ? 0 : 1;
    }

    if (scan->parsed()) {
        pexeq_report* report = nullptr;
        pexeq_status status = pexeq_scan(a_max_ul, b_max_ul, c_max_ul, height.c_str(),
                                         allow_pp ? 0 : 1, workers, &report);
        if (status != PEXEQ_OK) return fail(status);
        char* meta_raw = nullptr;
        pexeq_report_metadata_json(report, &meta_raw);
        std::string meta = take(meta_raw);
        status = format == "tsv" ? pexeq_report_tsv(report, &raw)
                                 : pexeq_report_jsonl(report, &raw);
        std::string rows = take(raw);
        pexeq_report_free(report);
        if (status != PEXEQ_OK) return fail(status);
        if (!write_output(rows, out_path)) return 1;
        if (out_path.empty()) {
            std::cerr << meta << "\n"; // sidecar goes to stderr in stream mode
        } else {
            std::ofstream side(out_path + ".meta.json", std::ios::binary);
            if (!side) {
                std::cerr << "pexeq: cannot open " << out_path << ".meta.json\n";
                return 1;
            }
            side << meta << "\n";
        }
        return 0;
    }

    if (exceptional->parsed()) {
        pexeq_status status = pexeq_exceptional_verify(r_max, height.c_str(), &raw);
        if (status != PEXEQ_OK) return fail(status);
        std::string rows = take(raw);
        return write_output(format == "tsv" ? scan_schema_rows_tsv(rows) : rows, out_path)
                   ? 0
                   : 1;
    }

    if (system_cmd->parsed()) {
        pexeq_status status = pexeq_system_search(c.c_str(), sys_a_max.c_str(), z_max, &raw);
        if (status != PEXEQ_OK) return fail(status);
        std::string rows = take(raw);
        return write_output(format == "tsv" ? system_rows_tsv(rows) : rows, out_path) ? 0 : 1;
    }

    if (certify->parsed()) {
        pexeq_status status = pexeq_certify(r_scan, oracle_c_max, &raw);
        if (status != PEXEQ_OK) return fail(status);
        return write_output(take(raw), out_path) ? 0 : 1;
    }

    return 2;
}
