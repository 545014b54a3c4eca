#include "scan.hpp"

#include "exceptional.hpp"
#include "format.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace pexeq {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void validate_config(const ScanConfig& cfg) {
    require(cfg.a_max >= 2 && cfg.b_max >= 2 && cfg.c_max >= 2,
            "scan bounds must all be >= 2");
    require(cfg.workers >= 1, "workers must be >= 1");
    require(cfg.height >= 2, "scan height must be >= 2");
}

bool same_search_config(const ScanConfig& lhs, const ScanConfig& rhs) {
    // workers is an execution knob, not part of the search identity
    return lhs.a_max == rhs.a_max && lhs.b_max == rhs.b_max && lhs.c_max == rhs.c_max &&
           lhs.height == rhs.height &&
           lhs.exclude_perfect_powers == rhs.exclude_perfect_powers;
}

std::vector<ScanRow> scan_c_block(const ScanConfig& cfg, unsigned long c_from,
                                  unsigned long c_to, const std::vector<char>& is_pp) {
    std::vector<ScanRow> rows;
    for (unsigned long c = c_from; c <= c_to; ++c) {
        if (cfg.exclude_perfect_powers && is_pp[c]) continue;
        for (unsigned long a = 2; a <= cfg.a_max; ++a) {
            if (cfg.exclude_perfect_powers && is_pp[a]) continue;
            if (std::gcd(a, c) != 1) continue;
            for (unsigned long b = 2; b <= cfg.b_max; ++b) {
                if (cfg.exclude_perfect_powers && is_pp[b]) continue;
                if (std::gcd(a, b) != 1 || std::gcd(b, c) != 1) continue;
                Triple t{Int(a), Int(b), Int(c)};
                auto sols = enumerate_solutions(t, cfg.height);
                if (sols.size() < 2) continue;
                ScanRow row;
                row.a = a;
                row.b = b;
                row.c = c;
                row.solutions = std::move(sols);
                row.exceptional = in_exceptional_set(Int(a), Int(b), Int(c));
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void finalize(ScanReport& report) {
    std::sort(report.rows.begin(), report.rows.end(),
              [](const ScanRow& lhs, const ScanRow& rhs) {
                  if (lhs.a != rhs.a) return lhs.a < rhs.a;
                  if (lhs.b != rhs.b) return lhs.b < rhs.b;
                  return lhs.c < rhs.c;
              });

    report.findings.clear();
    for (const ScanRow& row : report.rows) {
        std::size_t n = row.solutions.size();
        std::string name = "(" + std::to_string(row.a) + "," + std::to_string(row.b) + "," +
                           std::to_string(row.c) + ")";
        if (row.c % 2 == 1 && n > 2) {
            report.findings.push_back("odd c bound exceeded: " + name +
                                      " has N = " + std::to_string(n));
        }
        if (row.c % 2 == 0) {
            bool known_three = (row.c == 2 && ((row.a == 3 && row.b == 5) ||
                                               (row.a == 5 && row.b == 3)));
            if (n > 3 || (n == 3 && !known_three)) {
                report.findings.push_back("even c bound exceeded: " + name +
                                          " has N = " + std::to_string(n));
            }
        }
    }

    std::string canonical;
    for (const ScanRow& row : report.rows) {
        canonical += scan_row_jsonl(row, report.config.height);
        canonical += "\n";
    }
    report.checksum = fnv1a64(canonical);
}

} // namespace

ScanReport scan_shard(const ScanConfig& cfg, unsigned long c_lo, unsigned long c_hi) {
    validate_config(cfg);
    require(2 <= c_lo && c_lo <= c_hi && c_hi <= cfg.c_max,
            "shard range must satisfy 2 <= c_lo <= c_hi <= c_max");

    unsigned long top = std::max({cfg.a_max, cfg.b_max, cfg.c_max});
    std::vector<char> is_pp(top + 1, 0);
    for (unsigned long n = 4; n <= top; ++n) {
        is_pp[n] = is_perfect_power(Int(n)).has_value() ? 1 : 0;
    }

    const unsigned long span = c_hi - c_lo + 1;
    const unsigned workers =
        static_cast<unsigned>(std::min<unsigned long>(cfg.workers, span));

    std::vector<std::vector<ScanRow>> parts(workers);
    if (workers == 1) {
        parts[0] = scan_c_block(cfg, c_lo, c_hi, is_pp);
    } else {
        // static contiguous chunks over c
        std::vector<std::thread> pool;
        unsigned long chunk = span / workers, extra = span % workers;
        unsigned long next = c_lo;
        for (unsigned w = 0; w < workers; ++w) {
            unsigned long size = chunk + (w < extra ? 1 : 0);
            unsigned long from = next, to = next + size - 1;
            next = to + 1;
            pool.emplace_back([&cfg, &is_pp, &parts, w, from, to] {
                parts[w] = scan_c_block(cfg, from, to, is_pp);
            });
        }
        for (auto& th : pool) th.join();
    }

    ScanReport report;
    report.config = cfg;
    report.c_lo = c_lo;
    report.c_hi = c_hi;
    for (auto& part : parts) {
        report.rows.insert(report.rows.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
    }
    finalize(report);
    return report;
}

ScanReport scan_range(const ScanConfig& cfg) {
    validate_config(cfg);
    return scan_shard(cfg, 2, cfg.c_max);
}

ScanReport merge_reports(const std::vector<ScanReport>& parts) {
    require(!parts.empty(), "cannot merge an empty report list");
    for (const ScanReport& part : parts) {
        require(same_search_config(part.config, parts.front().config),
                "merge requires identical scan configurations");
    }
    std::vector<const ScanReport*> ordered;
    for (const ScanReport& part : parts) ordered.push_back(&part);
    std::sort(ordered.begin(), ordered.end(),
              [](const ScanReport* lhs, const ScanReport* rhs) { return lhs->c_lo < rhs->c_lo; });
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        require(ordered[i - 1]->c_hi < ordered[i]->c_lo, "shard base ranges overlap");
    }

    ScanReport merged;
    merged.config = parts.front().config;
    merged.c_lo = ordered.front()->c_lo;
    merged.c_hi = ordered.back()->c_hi;
    for (const ScanReport* part : ordered) {
        merged.rows.insert(merged.rows.end(), part->rows.begin(), part->rows.end());
    }
    std::sort(merged.rows.begin(), merged.rows.end(),
              [](const ScanRow& lhs, const ScanRow& rhs) {
                  return std::tie(lhs.a, lhs.b, lhs.c) < std::tie(rhs.a, rhs.b, rhs.c);
              });
    merged.rows.erase(std::unique(merged.rows.begin(), merged.rows.end(),
                                  [](const ScanRow& lhs, const ScanRow& rhs) {
                                      return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
                                  }),
                      merged.rows.end());
    finalize(merged);
    return merged;
}

} // namespace pexeq
