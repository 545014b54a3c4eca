#include "pexeq/pexeq.h"

#include "errors.hpp"
#include "exceptional.hpp"
#include "format.hpp"
#include "scan.hpp"
#include "solver.hpp"
#include "system.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace pexeq;

struct pexeq_report {
    ScanReport report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
pexeq_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PEXEQ_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PEXEQ_INVALID_ARGUMENT;
    } catch (const VerifyError& e) {
        g_last_error = e.what();
        return PEXEQ_VERIFY_FAILED;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PEXEQ_INTERNAL_ERROR;
    }
}

std::string require_arg(const char* value, const char* name) {
    if (!value) throw std::invalid_argument(std::string(name) + " must not be null");
    return value;
}

ScanConfig make_config(unsigned long a_max, unsigned long b_max, unsigned long c_max,
                       const char* height, int exclude_perfect_powers, unsigned workers) {
    ScanConfig cfg;
    cfg.a_max = a_max;
    cfg.b_max = b_max;
    cfg.c_max = c_max;
    cfg.height = parse_height(require_arg(height, "height"));
    cfg.exclude_perfect_powers = exclude_perfect_powers != 0;
    cfg.workers = workers;
    return cfg;
}

} // namespace

extern "C" {

const char* pexeq_version(void) {
    return "1.0.0";
}

const char* pexeq_last_error(void) {
    return g_last_error.c_str();
}

void pexeq_string_free(char* s) {
    std::free(s);
}

pexeq_status pexeq_solve(const char* a, const char* b, const char* c, const char* height,
                         char** out) {
    return guarded([&] {
        require_arg(a, "a");
        require_arg(b, "b");
        require_arg(c, "c");
        Triple t(parse_int(a), parse_int(b), parse_int(c));
        Int h = parse_height(require_arg(height, "height"), t.c);
        std::string rows;
        for (const Solution& s : enumerate_solutions(t, h)) {
            rows += solution_jsonl(t, s);
            rows += "\n";
        }
        if (!out) throw std::invalid_argument("out must not be null");
        *out = dup_string(rows);
    });
}

pexeq_status pexeq_count(const char* a, const char* b, const char* c, const char* height,
                         char** out) {
    return guarded([&] {
        Triple t(parse_int(require_arg(a, "a")), parse_int(require_arg(b, "b")),
                 parse_int(require_arg(c, "c")));
        Int h = parse_height(require_arg(height, "height"), t.c);
        if (!out) throw std::invalid_argument("out must not be null");
        *out = dup_string(count_jsonl(count_solutions(t, h)) + "\n");
    });
}

pexeq_status pexeq_exceptional_verify(unsigned long r_max, const char* height, char** out) {
    return guarded([&] {
        std::string bound = require_arg(height, "height");
        VerifyPolicy policy;
        if (bound != "auto") {
            policy.height = parse_height(bound);
        }
        auto entries = exceptional_set(r_max, policy);
        std::string rows;
        for (const ExceptionalEntry& e : entries) {
            rows += exceptional_entry_jsonl(e);
            rows += "\n";
        }
        if (!out) throw std::invalid_argument("out must not be null");
        *out = dup_string(rows);
    });
}

pexeq_status pexeq_system_search(const char* c, const char* a_max, unsigned long z_max,
                                 char** out) {
    return guarded([&] {
        auto sols = brute_force_system(parse_int(require_arg(c, "c")),
                                       parse_int(require_arg(a_max, "a_max")), z_max);
        std::string rows;
        for (const SystemSolution& s : sols) {
            rows += system_solution_jsonl(s);
            rows += "\n";
        }
        if (!out) throw std::invalid_argument("out must not be null");
        *out = dup_string(rows);
    });
}

pexeq_status pexeq_certify(unsigned long r_scan, unsigned long oracle_c_max, char** out) {
    return guarded([&] {
        CertificateParams params;
        params.r_scan = r_scan;
        params.oracle_c_max = oracle_c_max;
        Certificate cert = theorem_certificate(params);
        if (!out) throw std::invalid_argument("out must not be null");
        *out = dup_string(certificate_json(cert));
    });
}

pexeq_status pexeq_scan(unsigned long a_max, unsigned long b_max, unsigned long c_max,
                        const char* height, int exclude_perfect_powers, unsigned workers,
                        pexeq_report** out) {
    return guarded([&] {
        ScanConfig cfg = make_config(a_max, b_max, c_max, height, exclude_perfect_powers,
                                     workers);
        if (!out) throw std::invalid_argument("out must not be null");
        *out = new pexeq_report{scan_range(cfg)};
    });
}

pexeq_status pexeq_scan_shard(unsigned long a_max, unsigned long b_max, unsigned long c_max,
                              const char* height, int exclude_perfect_powers,
                              unsigned workers, unsigned long c_lo, unsigned long c_hi,
                              pexeq_report** out) {
    return guarded([&] {
        ScanConfig cfg = make_config(a_max, b_max, c_max, height, exclude_perfect_powers,
                                     workers);
        if (!out) throw std::invalid_argument("out must not be null");
        *out = new pexeq_report{scan_shard(cfg, c_lo, c_hi)};
    });
}

pexeq_status pexeq_report_merge(const pexeq_report* const* parts, size_t n_parts,
                                pexeq_report** out) {
    return guarded([&] {
        if (!parts && n_parts > 0)
            throw std::invalid_argument("parts must not be null");
        std::vector<ScanReport> reports;
        reports.reserve(n_parts);
        for (size_t i = 0; i < n_parts; ++i) {
            if (!parts[i]) throw std::invalid_argument("parts must not contain null");
            reports.push_back(parts[i]->report);
        }
        ScanReport merged = merge_reports(reports);
        if (!out) throw std::invalid_argument("out must not be null");
        *out = new pexeq_report{std::move(merged)};
    });
}

size_t pexeq_report_row_count(const pexeq_report* report) {
    return report ? report->report.rows.size() : 0;
}

size_t pexeq_report_finding_count(const pexeq_report* report) {
    return report ? report->report.findings.size() : 0;
}

uint64_t pexeq_report_checksum(const pexeq_report* report) {
    return report ? report->report.checksum : 0;
}

pexeq_status pexeq_report_jsonl(const pexeq_report* report, char** out) {
    return guarded([&] {
        if (!report || !out) throw std::invalid_argument("report and out must not be null");
        *out = dup_string(scan_report_jsonl(report->report));
    });
}

pexeq_status pexeq_report_tsv(const pexeq_report* report, char** out) {
    return guarded([&] {
        if (!report || !out) throw std::invalid_argument("report and out must not be null");
        *out = dup_string(scan_report_tsv(report->report));
    });
}

pexeq_status pexeq_report_metadata_json(const pexeq_report* report, char** out) {
    return guarded([&] {
        if (!report || !out) throw std::invalid_argument("report and out must not be null");
        *out = dup_string(scan_report_metadata_json(report->report));
    });
}

void pexeq_report_free(pexeq_report* report) {
    delete report;
}

} // extern "C"
