#include "minrep/catalog.hpp"

#include <numeric>
#include <sstream>

#include "minrep/arith.hpp"
#include "minrep/errors.hpp"

namespace minrep {

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t projective_index(std::uint64_t q, std::uint32_t n) {
  return (pow_u64(q, n) - 1) / (q - 1);
}

bool hyperplane_shape(const Mat& m) {
  for (std::uint32_t j = 0; j + 1 < m.n; ++j)
    if (m.at(m.n - 1, j) != 0) return false;
  return true;
}

void require_odd_field(const Field& F, std::uint64_t min_q) {
  if (F.q() < min_q) throw InvalidInput("catalog: q too small for this construction");
}
SubgroupSpec audited(SubgroupSpec s) {
  if (s.predicate) audit_predicate(s.group, *s.predicate);
  return s;
}

std::uint64_t sl_center_index(const GroupId& sl) {
  const std::uint64_t g = std::gcd<std::uint64_t>(sl.n, sl.q() - 1);
  return (sl.q() - 1) / g;
}

}  // namespace

SubgroupSpec det_subgroup(const GroupId& gl, std::uint64_t t) {
  if (gl.kind != GroupKind::GL) throw InvalidInput("det_subgroup: GL ambient required");
  const std::uint64_t qm1 = gl.q() - 1;
  if (t == 0 || qm1 % t != 0) throw InvalidInput("det_subgroup: t must divide q-1");
  const FieldPtr field = gl.field;

  SubgroupSpec s;
  s.name = "det_subgroup(" + std::to_string(t) + ")";
  s.group = gl;
  s.claimed_index = t;
  s.claimed_core = NormalDescriptor{t / std::gcd<std::uint64_t>(gl.n, t), true};
  s.params = {{"t", t}};
  s.predicate = MembershipPredicate{
      "det_subgroup",
      {{"t", t}},
      [field, t](const Mat& m) {
        const Field::Elt d = det(*field, m);
        return d != 0 && field->in_index_subgroup(d, t);
      }};
  return audited(std::move(s));
}

SubgroupSpec odd_borel(FieldPtr field) {
  require_odd_field(*field, 3);
  const std::uint64_t q = field->q();
  const std::uint64_t two_part = p_part(q - 1, 2);

  SubgroupSpec s;
  s.name = "odd_borel";
  s.group = make_group(GroupKind::SL, 2, field);
  s.claimed_index = two_part * (q + 1);
  s.claimed_core = NormalDescriptor{q - 1, false};  // corefree
  s.params = {{"two_part", two_part}};
  s.predicate = MembershipPredicate{
      "odd_borel",
      {{"two_part", two_part}},
      [field, two_part](const Mat& m) {
        return m.at(1, 0) == 0 && m.at(0, 0) != 0 &&
               field->in_index_subgroup(m.at(0, 0), two_part);
      }};
  return audited(std::move(s));
}

SubgroupSpec twisted_odd_borel(FieldPtr field, std::uint64_t twist) {
  require_odd_field(*field, 3);
  const std::uint64_t q = field->q();
  if (twist >= q - 1) throw InvalidInput("twisted_odd_borel: twist out of range");
  const std::uint64_t two_part = p_part(q - 1, 2);

  SubgroupSpec s;
  s.name = "twisted_odd_borel(" + std::to_string(twist) + ")";
  s.group = make_group(GroupKind::GL, 2, field);
  s.claimed_index = two_part * (q + 1);
  s.claimed_core = NormalDescriptor{two_part, false};
  s.params = {{"twist", twist}, {"two_part", two_part}};
  s.predicate = MembershipPredicate{
      "twisted_odd_borel",
      {{"twist", twist}, {"two_part", two_part}},
      [field, twist, two_part](const Mat& m) {
        if (m.at(1, 0) != 0 || m.at(0, 0) == 0) return false;
        const Field::Elt d = det(*field, m);
        if (d == 0) return false;
        // top-left * det^{-(twist+1)} must lie in the odd-part subgroup
        const Field::Elt v = field->mul(m.at(0, 0), field->pow(field->inv(d), twist + 1));
        return field->in_index_subgroup(v, two_part);
      }};
  return audited(std::move(s));
}

SubgroupSpec parabolic(const GroupId& sl) {
  if (sl.kind != GroupKind::SL) throw InvalidInput("parabolic: SL ambient required");
  SubgroupSpec s;
  s.name = "parabolic";
  s.group = sl;
  s.claimed_index = projective_index(sl.q(), sl.n);
  s.claimed_core = NormalDescriptor{sl_center_index(sl), false};
  s.predicate =
      MembershipPredicate{"parabolic", {}, [](const Mat& m) { return hyperplane_shape(m); }};
  return audited(std::move(s));
}

SubgroupSpec block_det_parabolic(const GroupId& sl, std::uint64_t p) {
  if (sl.kind != GroupKind::SL) throw InvalidInput("block_det_parabolic: SL ambient required");
  const std::uint64_t q = sl.q();
  const std::uint64_t g = std::gcd<std::uint64_t>(sl.n, q - 1);
  if (!is_prime(p) || g % p != 0)
    throw InvalidInput("block_det_parabolic: p must be a prime dividing gcd(n, q-1)");
  const std::uint64_t part = p_part(q - 1, p);
  const FieldPtr field = sl.field;
  const std::uint32_t n = sl.n;

  // scalar intersection by exponent arithmetic over the center of SL_n
  std::uint64_t accepted = 0;
  const std::uint64_t step = (q - 1) / g;
  for (std::uint64_t k = 0; k < g; ++k) {
    const std::uint64_t exp = std::uint64_t(n - 1) * k * step % (q - 1);
    if (exp % part == 0) ++accepted;
  }

  SubgroupSpec s;
  s.name = "block_det_parabolic(" + std::to_string(p) + ")";
  s.group = sl;
  s.claimed_index = projective_index(q, n) * part;
  s.claimed_core = NormalDescriptor{(q - 1) / accepted, false};
  s.params = {{"p", p}, {"p_part", part}};
  s.predicate = MembershipPredicate{
      "block_det_parabolic",
      {{"p", p}, {"p_part", part}},
      [field, part, n](const Mat& m) {
        if (!hyperplane_shape(m)) return false;
        const Field::Elt bd = block_det(*field, m, n - 1);
        return bd != 0 && field->in_index_subgroup(bd, part);
      }};
  return audited(std::move(s));
}

SubgroupSpec hyperplane_stabilizer(const GroupId& gl) {
  if (gl.kind != GroupKind::GL) throw InvalidInput("hyperplane_stabilizer: GL ambient required");
  SubgroupSpec s;
  s.name = "hyperplane_stabilizer";
  s.group = gl;
  s.claimed_index = projective_index(gl.q(), gl.n);
  s.claimed_core = NormalDescriptor{1, false};  // full center
  s.predicate = MembershipPredicate{
      "hyperplane_stabilizer", {}, [](const Mat& m) { return hyperplane_shape(m); }};
  return audited(std::move(s));
}

SubgroupSpec restricted_hyperplane_stabilizer(const GroupId& gl) {
  if (gl.kind != GroupKind::GL)
    throw InvalidInput("restricted_hyperplane_stabilizer: GL ambient required");
  const std::uint64_t q = gl.q();
  const SplitParts sp = split_parts(gl.n, q, q - 1);
  if (sp.g <= 1)
    throw InvalidInput("restricted_hyperplane_stabilizer: gcd(n, q-1) > 1 required");
  const std::uint64_t m0 = sp.g_part;
  const FieldPtr field = gl.field;
  const std::uint32_t n = gl.n;

  SubgroupSpec s;
  s.name = "restricted_hyperplane_stabilizer";
  s.group = gl;
  s.claimed_index = projective_index(q, n) * m0;
  s.claimed_core = NormalDescriptor{m0, false};
  s.params = {{"corner_index", m0}};
  s.predicate = MembershipPredicate{
      "restricted_hyperplane_stabilizer",
      {{"corner_index", m0}},
      [field, m0, n](const Mat& m) {
        if (!hyperplane_shape(m)) return false;
        const Field::Elt c = m.at(n - 1, n - 1);
        return c != 0 && field->in_index_subgroup(c, m0);
      }};
  return audited(std::move(s));
}

SubgroupSpec twisted_parabolic_gl3(FieldPtr field, std::uint64_t twist) {
  require_odd_field(*field, 5);
  const std::uint64_t q = field->q();
  if (twist >= q - 1) throw InvalidInput("twisted_parabolic_gl3: twist out of range");
  const std::uint64_t three_part = p_part(q - 1, 3);

  SubgroupSpec s;
  s.name = "twisted_parabolic_gl3(" + std::to_string(twist) + ")";
  s.group = make_group(GroupKind::GL, 3, field);
  s.claimed_index = projective_index(q, 3) * three_part;
  s.claimed_core = NormalDescriptor{three_part, false};
  s.params = {{"twist", twist}, {"three_part", three_part}};
  s.predicate = MembershipPredicate{
      "twisted_parabolic_gl3",
      {{"twist", twist}, {"three_part", three_part}},
      [field, twist, three_part](const Mat& m) {
        if (!hyperplane_shape(m)) return false;
        const Field& F = *field;
        const Field::Elt a = det(F, m);
        if (a == 0) return false;
        // peel off diag(a^{twist+1}, a^{-twist-1}, a)
        const Field::Elt at = F.pow(a, twist + 1);
        Mat u = m;
        for (std::uint32_t j = 0; j < 3; ++j) {
          u.at(0, j) = F.mul(F.inv(at), u.at(0, j));
          u.at(1, j) = F.mul(at, u.at(1, j));
          u.at(2, j) = F.mul(F.inv(a), u.at(2, j));
        }
        const Field::Elt bd = block_det(F, u, 2);
        return bd != 0 && F.in_index_subgroup(bd, three_part);
      }};
  return audited(std::move(s));
}

namespace {

void append_det_members(Collection& c, const GroupId& gl, std::uint64_t skip_primes_of_g) {
  const std::uint64_t q = gl.q();
  for (const auto& [p, e] : factorize(q - 1).factors) {
    if (skip_primes_of_g % p == 0) continue;
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) pe *= p;
    c.members.push_back(det_subgroup(gl, pe));
  }
}

void finish_degree(Collection& c) {
  c.claimed_degree = 0;
  for (const SubgroupSpec& m : c.members) c.claimed_degree += m.claimed_index;
}

SubgroupSpec unresolved_member(const GroupId& group, std::uint64_t claimed_index,
                               NormalDescriptor claimed_core) {
  SubgroupSpec s;
  s.name = "unresolved_minimal_member";
  s.group = group;
  s.claimed_index = claimed_index;
  s.claimed_core = claimed_core;
  return s;  // no predicate: the defining subgroup is not pinned down
}

}  // namespace

Collection sl2_collection(FieldPtr field) {
  Collection c;
  c.members.push_back(odd_borel(std::move(field)));
  finish_degree(c);
  return c;
}

Collection sl3_collection(FieldPtr field) {
  require_odd_field(*field, 5);
  const std::uint64_t q = field->q();
  const GroupId sl = make_group(GroupKind::SL, 3, field);
  const std::uint64_t g = std::gcd<std::uint64_t>(3, q - 1);

  Collection c;
  if (g == 1) {
    c.members.push_back(parabolic(sl));
  } else if ((q - 1) / 3 > p_part(q - 1, 3)) {
    c.members.push_back(block_det_parabolic(sl, 3));
  } else {
    // the claimed minimal subgroup in this regime has no settled construction
    c.members.push_back(
        unresolved_member(sl, (pow_u64(q, 3) - 1) / 3, NormalDescriptor{q - 1, false}));
  }
  finish_degree(c);
  return c;
}

Collection gl2_collection(FieldPtr field, std::uint64_t twist) {
  const GroupId gl = make_group(GroupKind::GL, 2, field);
  Collection c;
  c.members.push_back(twisted_odd_borel(field, twist));
  append_det_members(c, gl, 2);
  finish_degree(c);
  return c;
}

Collection gl3_collection(FieldPtr field, std::uint64_t twist) {
  require_odd_field(*field, 5);
  const std::uint64_t q = field->q();
  const GroupId gl = make_group(GroupKind::GL, 3, field);
  const std::uint64_t g = std::gcd<std::uint64_t>(3, q - 1);

  Collection c;
  if (g == 3 && (q - 1) / 3 < p_part(q - 1, 3)) {
    c.members.push_back(unresolved_member(gl, (pow_u64(q, 3) - 1) / 3,
                                          NormalDescriptor{p_part(q - 1, 3), false}));
  } else {
    c.members.push_back(twisted_parabolic_gl3(field, twist));
  }
  append_det_members(c, gl, g);
  finish_degree(c);
  return c;
}

Collection gln_upper_collection(std::uint32_t n, FieldPtr field) {
  require_odd_field(*field, 5);
  const GroupId gl = make_group(GroupKind::GL, n, field);
  const std::uint64_t g = std::gcd<std::uint64_t>(n, field->q() - 1);

  Collection c;
  if (g > 1)
    c.members.push_back(restricted_hyperplane_stabilizer(gl));
  else
    c.members.push_back(hyperplane_stabilizer(gl));
  append_det_members(c, gl, g);
  finish_degree(c);
  return c;
}

std::vector<Sl3MaximalOrder> sl3_maximal_subgroup_orders(std::uint64_t q) {
  if (q < 5) throw InvalidInput("sl3_maximal_subgroup_orders: q >= 5 required");
  auto pe = prime_power_split(q);
  if (!pe || pe->first == 2)
    throw InvalidInput("sl3_maximal_subgroup_orders: q must be an odd prime power");
  const std::uint64_t p = pe->first;

  std::vector<Sl3MaximalOrder> out;
  const std::uint64_t q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q;

  out.push_back({"E_q^2:GL_2(q)", q6 - q5 - q4 + q3, true});
  out.push_back({"E_q^{1+2}:(q-1)^2", (q - 1) * (q - 1) * q3, true});
  out.push_back({"GL_2(q)", q4 - q3 - q2 + q, true});
  out.push_back({"(q-1)^2:S_3", 6 * (q - 1) * (q - 1), true});
  out.push_back({"(q^2+q+1):3", 3 * (q2 + q + 1), true});
  out.push_back({"3_+^{1+2}:Q_8.(q-1,9)/3", 72 * std::gcd<std::uint64_t>(q - 1, 9),
                 p % 3 == 1 && q % 3 == 1});
  out.push_back({"(q-1,3) x SO_3(q)", (q3 - q) * std::gcd<std::uint64_t>(q - 1, 3), true});

  // unitary subfield entry exists only for square q
  std::uint64_t q0 = 0;
  for (std::uint64_t r = 3; r * r <= q; ++r)
    if (r * r == q) q0 = r;
  const bool square = q0 != 0;
  const std::uint64_t su_order =
      square ? q0 * q0 * q0 * (q0 * q0 * q0 + 1) * (q0 * q0 - 1) *
                   std::gcd<std::uint64_t>(q0 - 1, 3)
             : 0;
  out.push_back({"(q_0-1,3) x SU_3(q_0)", su_order, square});

  auto mod7_ok = [](std::uint64_t v) {
    const std::uint64_t r = v % 7;
    return r == 1 || r == 2 || r == 4;
  };
  out.push_back(
      {"(q-1,3) x L_2(7)", 336 * std::gcd<std::uint64_t>(q - 1, 3), mod7_ok(q) && mod7_ok(p)});
  out.push_back({"3.A_6", 3 * 360, true});
  return out;
}

std::string to_json(const SubgroupSpec& spec) {
  std::ostringstream os;
  os << "{\"name\":\"" << spec.name << "\",\"kind\":\"" << to_string(spec.group.kind)
     << "\",\"n\":" << spec.group.n << ",\"q\":" << spec.group.q() << ",\"params\":{";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) os << ",";
    os << "\"" << spec.params[i].first << "\":" << spec.params[i].second;
  }
  os << "},\"claimed_index\":" << spec.claimed_index << ",\"claimed_core\":{\"central_part\":"
     << spec.claimed_core.central_part
     << ",\"contains_derived\":" << (spec.claimed_core.contains_derived ? "true" : "false")
     << "}}";
  return os.str();
}

}  // namespace minrep
