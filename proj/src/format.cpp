#include "format.hpp"

#include <cstdio>
#include <stdexcept>

namespace pexeq {

std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

Int parse_height(const std::string& text, const std::optional<Int>& base_c) {
    auto caret = text.find('^');
    if (caret == std::string::npos) {
        Int h = parse_int(text);
        if (h < 0) throw std::invalid_argument("height must be nonnegative");
        return h;
    }
    std::string base_text = text.substr(0, caret);
    std::string exp_text = text.substr(caret + 1);
    Int base;
    if (base_text == "c") {
        if (!base_c) throw std::invalid_argument("height form c^k needs a triple base c");
        base = *base_c;
    } else {
        base = parse_int(base_text);
    }
    if (base < 2) throw std::invalid_argument("height base must be >= 2");
    Int exp = parse_int(exp_text);
    if (exp < 0 || exp > 1000000) throw std::invalid_argument("height exponent out of range");
    return pow_int(base, exp.get_ui());
}

namespace {

std::string solutions_array(const std::vector<Solution>& sols) {
    std::string out = "[";
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(sols[i].x) + "," + std::to_string(sols[i].y) + "," +
               std::to_string(sols[i].z) + "]";
    }
    out += "]";
    return out;
}

std::string solutions_tsv_field(const std::vector<Solution>& sols) {
    std::string out;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(sols[i].x) + "," + std::to_string(sols[i].y) + "," +
               std::to_string(sols[i].z);
    }
    return out;
}

} // namespace

std::string solution_jsonl(const Triple& t, const Solution& s) {
    return "{\"x\":" + std::to_string(s.x) + ",\"y\":" + std::to_string(s.y) +
           ",\"z\":" + std::to_string(s.z) + ",\"value\":\"" + to_decimal(pow_int(t.c, s.z)) +
           "\"}";
}

std::string solution_tsv_header() {
    return "x\ty\tz\tvalue";
}

std::string solution_tsv(const Triple& t, const Solution& s) {
    return std::to_string(s.x) + "\t" + std::to_string(s.y) + "\t" + std::to_string(s.z) +
           "\t" + to_decimal(pow_int(t.c, s.z));
}

std::string count_jsonl(const Int& n) {
    return "{\"count\":" + to_decimal(n) + "}";
}

std::string scan_row_jsonl(const ScanRow& row, const Int& height) {
    return "{\"a\":" + std::to_string(row.a) + ",\"b\":" + std::to_string(row.b) +
           ",\"c\":" + std::to_string(row.c) + ",\"H\":\"" + to_decimal(height) +
           "\",\"N\":" + std::to_string(row.solutions.size()) +
           ",\"solutions\":" + solutions_array(row.solutions) +
           ",\"exceptional\":" + (row.exceptional ? "true" : "false") + "}";
}

std::string scan_report_jsonl(const ScanReport& report) {
    std::string out;
    for (const ScanRow& row : report.rows) {
        out += scan_row_jsonl(row, report.config.height);
        out += "\n";
    }
    return out;
}

std::string scan_report_tsv(const ScanReport& report) {
    std::string out = "a\tb\tc\tH\tN\tsolutions\texceptional\n";
    for (const ScanRow& row : report.rows) {
        out += std::to_string(row.a) + "\t" + std::to_string(row.b) + "\t" +
               std::to_string(row.c) + "\t" + to_decimal(report.config.height) + "\t" +
               std::to_string(row.solutions.size()) + "\t" +
               solutions_tsv_field(row.solutions) + "\t" +
               (row.exceptional ? "true" : "false") + "\n";
    }
    return out;
}

std::string scan_report_metadata_json(const ScanReport& report) {
    std::string findings = "[";
    for (std::size_t i = 0; i < report.findings.size(); ++i) {
        if (i) findings += ",";
        findings += "\"" + json_escape(report.findings[i]) + "\"";
    }
    findings += "]";
    return "{\"a_max\":" + std::to_string(report.config.a_max) +
           ",\"b_max\":" + std::to_string(report.config.b_max) +
           ",\"c_max\":" + std::to_string(report.config.c_max) + ",\"H\":\"" +
           to_decimal(report.config.height) + "\",\"exclude_perfect_powers\":" +
           (report.config.exclude_perfect_powers ? "true" : "false") +
           ",\"workers\":" + std::to_string(report.config.workers) +
           ",\"c_lo\":" + std::to_string(report.c_lo) +
           ",\"c_hi\":" + std::to_string(report.c_hi) +
           ",\"rows\":" + std::to_string(report.rows.size()) +
           ",\"checksum\":\"" + hex64(report.checksum) + "\",\"findings\":" + findings + "}";
}

std::string exceptional_entry_jsonl(const ExceptionalEntry& entry) {
    // persisted in the scan row schema; set members always flag true
    std::string out = "{\"a\":" + to_decimal(entry.triple.a) +
                      ",\"b\":" + to_decimal(entry.triple.b) +
                      ",\"c\":" + to_decimal(entry.triple.c) + ",\"H\":\"" +
                      to_decimal(entry.verified_height) +
                      "\",\"N\":" + std::to_string(entry.witnesses.size()) +
                      ",\"solutions\":" + solutions_array(entry.witnesses) +
                      ",\"exceptional\":true}";
    return out;
}

std::string system_solution_jsonl(const SystemSolution& s) {
    return "{\"a\":\"" + to_decimal(s.a) + "\",\"b\":\"" + to_decimal(s.b) + "\",\"c\":\"" +
           to_decimal(s.c) + "\",\"z\":" + std::to_string(s.z) +
           ",\"Z\":" + std::to_string(s.Z) + "}";
}

std::string system_solution_tsv_header() {
    return "a\tb\tc\tz\tZ";
}

std::string system_solution_tsv(const SystemSolution& s) {
    return to_decimal(s.a) + "\t" + to_decimal(s.b) + "\t" + to_decimal(s.c) + "\t" +
           std::to_string(s.z) + "\t" + std::to_string(s.Z);
}

std::string proof_trace_json(const ProofTrace& t) {
    return "{\"branch\":\"" + std::string(branch_name(t.branch)) + "\",\"a\":\"" +
           to_decimal(t.a) + "\",\"f\":\"" + to_decimal(t.f) + "\",\"D\":\"" +
           to_decimal(t.D) + "\",\"m\":\"" + to_decimal(t.m) + "\",\"verdict\":\"" +
           verdict_name(t.verdict) + "\",\"detail\":\"" + json_escape(t.detail) + "\"}";
}

std::string certificate_json(const Certificate& cert) {
    std::string out = "{\n\"solutions\":[";
    for (std::size_t i = 0; i < cert.solutions.size(); ++i) {
        if (i) out += ",";
        out += system_solution_jsonl(cert.solutions[i]);
    }
    out += "],\n";
    out += "\"r_scan\":" + std::to_string(cert.params.r_scan) + ",\n";
    out += "\"oracle_c_max\":" + std::to_string(cert.params.oracle_c_max) + ",\n";
    out += "\"oracle_a_max\":\"" + to_decimal(cert.params.oracle_a_max) + "\",\n";
    out += "\"oracle_z_max\":" + std::to_string(cert.params.oracle_z_max) + ",\n";
    out += "\"f2_a_limit\":" + std::to_string(cert.f2_a_limit) + ",\n";
    out += "\"oracle_agrees\":" + std::string(cert.oracle_agrees ? "true" : "false") + ",\n";
    out += "\"traces\":[\n";
    for (std::size_t i = 0; i < cert.traces.size(); ++i) {
        out += proof_trace_json(cert.traces[i]);
        out += (i + 1 < cert.traces.size()) ? ",\n" : "\n";
    }
    out += "]\n}\n";
    return out;
}

} // namespace pexeq
