#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minrep/catalog.hpp"
#include "minrep/degrees.hpp"
#include "minrep/group.hpp"

namespace minrep {

struct VerifyOptions {
  std::uint64_t twist = 0;
  std::uint32_t degree_cap = 5000;
  std::uint64_t explicit_cap = 2'500'000;
  std::uint64_t oracle_cap = 200;
};

/// Reconciliation record: formula value against constructed degree, the two
/// faithfulness checks, and the exact oracle, with absent fields marking
/// skipped stages.
struct DegreeReport {
  GroupKind kind = GroupKind::GL;
  std::uint32_t n = 2;
  std::uint64_t q = 5;
  std::uint64_t g = 1;
  DegreeResult formula;
  std::optional<std::uint64_t> constructed;
  std::optional<bool> structural;
  std::optional<bool> explicit_check;
  std::optional<std::uint64_t> oracle;
  bool agrees = false;
  std::vector<std::string> notes;
};

/// Coset-enumerates the subgroup and compares against the claimed index.
bool check_index(const SubgroupSpec& spec, std::uint32_t degree_cap = 5000);

/// Center-arithmetic faithfulness: verified cores must cover every prime
/// power of q-1, i.e. the lcm of the central indices is q-1. Cores of
/// predicate-backed members are recomputed with core_structural and must
/// match their claims; predicate-free members contribute their claimed core.
/// Returns false (with a reason) when no member has a central core.
bool check_collection_structural(const Collection& c, std::string* reason = nullptr);

/// Full kernel scan: builds every coset table, enumerates the whole group and
/// checks that only the identity acts trivially. All members need predicates.
bool check_collection_explicit(const Collection& c, std::uint64_t cap = 2'500'000);

/// Formula evaluation plus every verification stage that fits the caps.
DegreeReport reconcile(GroupKind kind, std::uint32_t n, std::uint64_t q,
                       const VerifyOptions& opts = {});

/// One-line JSON rendering of a report; absent stages serialize as null.
std::string report_json(const DegreeReport& r);

}  // namespace minrep
