/// Versioned line-oriented text formats (instances with optional embedded
/// rankings and labels, committees, coverage records) and the audit report
/// rendering. Values are exact rational literals; writing then reading is an
/// exact round trip. Indices are 1-based on disk, 0-based in memory.
#pragma once

#include "proprep/audit.hpp"
#include "proprep/coverage.hpp"
#include "proprep/instance.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace proprep {

struct ElectionFile {
    Instance instance;
    std::optional<RankedProfile> profile;  // rankings block, when present
};

void write_election(std::ostream& os, const Instance& inst,
                    const RankedProfile* profile = nullptr);
ElectionFile read_election(std::istream& is);

void write_election_file(const std::string& path, const Instance& inst,
                         const RankedProfile* profile = nullptr);
ElectionFile read_election_file(const std::string& path);

void write_committee(std::ostream& os, const std::vector<int>& committee);
std::vector<int> read_committee(std::istream& is);
void write_committee_file(const std::string& path, const std::vector<int>& committee);
std::vector<int> read_committee_file(const std::string& path);

void write_coverage(std::ostream& os, const CoverageRecord& rec);
CoverageRecord read_coverage(std::istream& is);
void write_coverage_file(const std::string& path, const CoverageRecord& rec);
CoverageRecord read_coverage_file(const std::string& path);

/// Human- and machine-readable audit report (exact values first, 6-place
/// decimals alongside).
void write_report(std::ostream& os, const AuditReport& report);

}  // namespace proprep
