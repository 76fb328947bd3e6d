#include "minrep/verify.hpp"

#include <numeric>
#include <sstream>

#include "minrep/errors.hpp"
#include "minrep/small_group.hpp"

namespace minrep {

bool check_index(const SubgroupSpec& spec, std::uint32_t degree_cap) {
  if (!spec.predicate) throw PreconditionViolated("check_index: member has no predicate");
  if (spec.claimed_index > degree_cap)
    throw DegreeCapExceeded("check_index: claimed index above degree cap");
  try {
    const CosetTable t = coset_enumeration(
        spec.group, *spec.predicate, static_cast<std::uint32_t>(spec.claimed_index));
    return t.degree() == spec.claimed_index;
  } catch (const DegreeCapExceeded&) {
    return false;  // true index exceeds the claim
  }
}

bool check_collection_structural(const Collection& c, std::string* reason) {
  if (c.members.empty()) throw PreconditionViolated("structural check: empty collection");
  const GroupId& g0 = c.members.front().group;
  const std::uint64_t qm1 = g0.q() - 1;

  std::uint64_t l = 1;
  bool any_central = false;
  for (const SubgroupSpec& m : c.members) {
    NormalDescriptor d = m.claimed_core;
    if (m.predicate) {
      const NormalDescriptor computed = core_structural(m.group, *m.predicate);
      if (!(computed == m.claimed_core)) {
        if (reason)
          *reason = m.name + ": computed core " + to_string(computed) +
                    " differs from claimed " + to_string(m.claimed_core);
        return false;
      }
      d = computed;
    }
    if (!d.contains_derived) any_central = true;
    l = std::lcm(l, d.central_part);
  }
  if (!any_central) {
    if (reason) *reason = "no member has a central core; intersection contains SL_n";
    return false;
  }
  if (l != qm1) {
    if (reason)
      *reason = "central indices only reach lcm " + std::to_string(l) + " of " +
                std::to_string(qm1);
    return false;
  }
  return true;
}

bool check_collection_explicit(const Collection& c, std::uint64_t cap) {
  if (c.members.empty()) throw PreconditionViolated("explicit check: empty collection");
  const GroupId& id = c.members.front().group;
  if (group_order(id) > cap) throw CapExceeded("explicit check: group order above cap");

  std::vector<CosetAction> actions;
  for (const SubgroupSpec& m : c.members) {
    if (!m.predicate)
      throw PreconditionViolated("explicit check: member without predicate: " + m.name);
    actions.push_back(
        {coset_enumeration(id, *m.predicate, static_cast<std::uint32_t>(m.claimed_index) + 1),
         *m.predicate});
  }
  return action_kernel_size(id, actions, cap) == 1;
}

namespace {

std::optional<Collection> theorem_collection(GroupKind kind, std::uint32_t n, FieldPtr field,
                                             std::uint64_t twist) {
  if (n == 2) return kind == GroupKind::SL ? sl2_collection(field) : gl2_collection(field, twist);
  if (n == 3) return kind == GroupKind::SL ? sl3_collection(field) : gl3_collection(field, twist);
  return std::nullopt;
}

}  // namespace

DegreeReport reconcile(GroupKind kind, std::uint32_t n, std::uint64_t q,
                       const VerifyOptions& opts) {
  DegreeReport r;
  r.kind = kind;
  r.n = n;
  r.q = q;

  r.formula = kind == GroupKind::SL ? p_sln(n, q) : p_gln(n, q);
  r.g = std::gcd<std::uint64_t>(n, q - 1);
  const FieldPtr field = field_of_order(q);
  const GroupId id = make_group(kind, n, field);
  const unsigned __int128 order = group_order(id);

  std::optional<Collection> coll;
  if (n <= 3) coll = theorem_collection(kind, n, field, opts.twist);

  if (coll) {
    // constructed degree: coset-verified member indices where the cap allows,
    // claimed indices elsewhere
    std::uint64_t total = 0;
    for (const SubgroupSpec& m : coll->members) {
      std::uint64_t deg = m.claimed_index;
      if (m.predicate && m.claimed_index <= opts.degree_cap) {
        try {
          const CosetTable t = coset_enumeration(
              id, *m.predicate, static_cast<std::uint32_t>(m.claimed_index));
          deg = t.degree();
          if (deg != m.claimed_index)
            r.notes.push_back(m.name + ": enumerated degree " + std::to_string(deg) +
                              " != claimed " + std::to_string(m.claimed_index));
        } catch (const DegreeCapExceeded&) {
          deg = m.claimed_index + 1;
          r.notes.push_back(m.name + ": enumerated degree exceeds claim");
        }
      } else if (!m.predicate) {
        r.notes.push_back(m.name + ": index taken on trust (no construction)");
      }
      total += deg;
    }
    r.constructed = total;

    if (q >= 5) {
      std::string reason;
      r.structural = check_collection_structural(*coll, &reason);
      if (!*r.structural) r.notes.push_back("structural: " + reason);
    }

    bool all_predicates = true;
    for (const SubgroupSpec& m : coll->members)
      if (!m.predicate) all_predicates = false;
    if (all_predicates && order <= opts.explicit_cap)
      r.explicit_check = check_collection_explicit(*coll, opts.explicit_cap);
  }

  if (order <= opts.oracle_cap)
    r.oracle = minimal_degree_oracle(id, static_cast<std::uint32_t>(opts.oracle_cap)).degree;

  r.agrees = true;
  if (r.constructed && *r.constructed != r.formula.value) r.agrees = false;
  if (r.structural && !*r.structural) r.agrees = false;
  if (r.explicit_check && !*r.explicit_check) r.agrees = false;
  if (r.oracle && *r.oracle != r.formula.value) r.agrees = false;
  return r;
}

std::string report_json(const DegreeReport& r) {
  std::ostringstream os;
  os << "{\"group\":\"" << to_string(r.kind) << "\",\"n\":" << r.n << ",\"q\":" << r.q
     << ",\"g\":" << r.g << ",\"formula\":" << r.formula.value << ",\"status\":\""
     << to_string(r.formula.status) << "\",\"constructed\":";
  if (r.constructed)
    os << *r.constructed;
  else
    os << "null";
  os << ",\"structural\":";
  if (r.structural)
    os << (*r.structural ? "true" : "false");
  else
    os << "null";
  os << ",\"explicit\":";
  if (r.explicit_check)
    os << (*r.explicit_check ? "true" : "false");
  else
    os << "null";
  os << ",\"oracle\":";
  if (r.oracle)
    os << *r.oracle;
  else
    os << "null";
  os << ",\"agrees\":" << (r.agrees ? "true" : "false") << "}";
  return os.str();
}

}  // namespace minrep
