#pragma once

#include "exceptional.hpp"
#include "scan.hpp"
#include "system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pexeq {

std::string json_escape(std::string_view text);

uint64_t fnv1a64(std::string_view bytes);
std::string hex64(uint64_t value);

/// Height bounds come as plain decimals ("1048576"), explicit powers
/// ("2^60"), or the triple-relative form "c^3" resolved against base_c.
Int parse_height(const std::string& text, const std::optional<Int>& base_c = std::nullopt);

// --- solve / count -------------------------------------------------------

std::string solution_jsonl(const Triple& t, const Solution& s);
std::string solution_tsv_header();
std::string solution_tsv(const Triple& t, const Solution& s);
std::string count_jsonl(const Int& n);

// --- scan reports --------------------------------------------------------

std::string scan_row_jsonl(const ScanRow& row, const Int& height);
std::string scan_report_jsonl(const ScanReport& report);
std::string scan_report_tsv(const ScanReport& report);
std::string scan_report_metadata_json(const ScanReport& report);

// --- exceptional entries (persisted in the scan row schema) ---------------

std::string exceptional_entry_jsonl(const ExceptionalEntry& entry);

// --- system solutions and proof traces ------------------------------------

std::string system_solution_jsonl(const SystemSolution& s);
std::string system_solution_tsv_header();
std::string system_solution_tsv(const SystemSolution& s);
std::string proof_trace_json(const ProofTrace& t);
std::string certificate_json(const Certificate& cert);

} // namespace pexeq
