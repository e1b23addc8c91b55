#include "compmat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "compmat/classes.hpp"
#include "compmat/degree.hpp"
#include "compmat/document.hpp"
#include "compmat/errors.hpp"
#include "compmat/fixtures.hpp"
#include "compmat/lcp.hpp"
#include "compmat/linalg.hpp"
#include "compmat/lp.hpp"

namespace compmat {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Vector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

bool VerifyReport::all_passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& i) { return i.passed(); }) &&
         std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed(); });
}

namespace {

class Tally {
 public:
  void declare(const std::string& name, bool evidence_only = false) {
    index_[name] = out_.size();
    out_.push_back(InvariantOutcome{name, evidence_only, 0, 0, std::nullopt, {}});
  }

  void check(const std::string& name, bool ok, const std::function<std::string()>& describe) {
    auto& o = out_.at(index_.at(name));
    ++o.checked;
    if (ok) return;
    ++o.failures;
    if (!o.first_counterexample) o.first_counterexample = describe();
  }

  void note(const std::string& name, std::string text) { out_.at(index_.at(name)).note = std::move(text); }

  std::vector<InvariantOutcome> take() { return std::move(out_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<InvariantOutcome> out_;
};

std::string show(const Matrix& a) { return "A=" + a.str(); }
std::string show(const Matrix& a, const Vector& q) { return show(a) + " q=" + to_string(q); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

IndexSet random_subset(std::mt19937_64& rng, std::size_t n, bool nonempty) {
  std::uniform_int_distribution<std::uint64_t> dist(nonempty ? 1 : 0, (std::uint64_t{1} << n) - 1);
  return IndexSet::from_mask(n, dist(rng));
}

/// z supported on a random σ with z_σ in ker A_σσ, so z ∘ Az = 0.
std::optional<Vector> sample_psi_kernel(std::mt19937_64& rng, const Matrix& a) {
  const std::size_t n = a.rows();
  const IndexSet sigma = random_subset(rng, n, true);
  const auto basis = null_space_basis(a.principal(sigma));
  if (basis.empty()) return std::nullopt;
  std::uniform_int_distribution<long> coef(-3, 3);
  Vector x = zero_vector(sigma.size());
  for (const auto& b : basis) x = x + Rational(coef(rng)) * b;
  if (is_zero(x)) x = basis.front();
  return embed(sigma, x);
}

Matrix permute(const Matrix& a, const std::vector<std::size_t>& p) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(p[i], p[j]);
  }
  return out;
}

/// Smallest k ≤ 64 such that v + 2^-k d lies in the piece, if any.
bool small_step_stays(const LCPInstance& inst, const SolutionPiece& piece, const Vector& d) {
  Rational t(1);
  for (int k = 0; k <= 64; ++k) {
    if (piece_contains(inst, piece, piece.particular.z + t * d)) return true;
    t = t / Rational(2);
  }
  return false;
}

void linalg_invariants(Tally& t, std::mt19937_64& rng, const Matrix& a, long bound) {
  const std::size_t n = a.rows();
  std::uniform_int_distribution<std::size_t> rows_dist(1, n + 1);
  Matrix rect(rows_dist(rng), n);
  {
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (std::size_t i = 0; i < rect.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) rect(i, j) = dist(rng);
    }
  }
  for (const Matrix* m : {&a, static_cast<const Matrix*>(&rect)}) {
    t.check("rank + nullity = columns", rank(*m) + null_space_basis(*m).size() == m->cols(),
            [&] { return show(*m); });
    const Vector b = random_vector(rng, m->rows(), bound);
    const auto sol = solve_linear(*m, b);
    bool ok = true;
    if (sol.consistent) {
      ok = (*m) * sol.particular == b;
      for (const auto& v : sol.null_basis) ok = ok && is_zero((*m) * v);
    } else {
      ok = is_zero(m->transpose() * sol.certificate) && !dot(sol.certificate, b).is_zero();
    }
    t.check("solve_linear solutions and certificates are exact", ok,
            [&] { return show(*m) + " b=" + to_string(b); });
  }

  const IndexSet alpha = random_subset(rng, n, false);
  if (!det(a.principal(alpha)).is_zero()) {
    const Matrix p = ppt(a, alpha).transformed;
    const IndexSet rest = alpha.complement();
    t.check("ppt is an involution", ppt(p, alpha).transformed == a,
            [&] { return show(a) + " alpha=" + alpha.str(); });
    const Matrix s = schur_complement(a, alpha);
    t.check("schur complement = complementary block of ppt", p.block(rest, rest) == s,
            [&] { return show(a) + " alpha=" + alpha.str(); });
    t.check("det A = det A_aa * det(A/A_aa)", det(a) == det(a.principal(alpha)) * det(s),
            [&] { return show(a) + " alpha=" + alpha.str(); });
  }

  // A random LP with mixed relations, and a homogeneous one with strict rows.
  std::uniform_int_distribution<int> rel_dist(0, 2);
  LinearSystem general(n);
  LinearSystem conic(n);
  for (std::size_t i = 0; i < n + 1; ++i) {
    const Relation rel[] = {Relation::Eq, Relation::Le, Relation::Ge};
    const Relation strict[] = {Relation::Eq, Relation::Lt, Relation::Gt};
    const int r = rel_dist(rng);
    general.add(random_vector(rng, n, bound), rel[r], Rational(std::uniform_int_distribution<long>(-bound, bound)(rng)));
    conic.add(random_vector(rng, n, bound), strict[r]);
  }
  for (const LinearSystem* sys : {&general, &conic}) {
    const auto res = lp_feasible(*sys);
    t.check("lp_feasible witness satisfies the system", !res.feasible || sys->satisfied_by(res.witness),
            [&] { return show(a) + " (random linear system)"; });
  }
}

void class_invariants(Tally& t, std::mt19937_64& rng, const Matrix& a) {
  const std::size_t n = a.rows();
  const auto cc = is_column_competent(a);
  bool sound = true;
  if (!cc.member) {
    sound = cc.witness_vector && is_zero(psi(a, *cc.witness_vector)) && !is_zero(a * *cc.witness_vector);
  } else {
    for (int s = 0; s < 1000 && sound; ++s) {
      const auto z = sample_psi_kernel(rng, a);
      if (z) sound = is_zero(psi(a, *z)) && is_zero(a * *z);
    }
  }
  t.check("column competence witnesses are sound", sound, [&] { return show(a); });

  const bool nd = is_principally_nondegenerate(a).member;
  t.check("all principal minors nonzero <=> every principal kernel trivial", nd == ker_psi_trivial(a),
          [&] { return show(a); });

  const bool adequate_thm = is_column_adequate(a, AdequacyMode::Theorem).member;
  const bool adequate_direct = is_column_adequate(a, AdequacyMode::Direct).member;
  t.check("column adequate <=> column competent and P0", adequate_thm == adequate_direct, [&] {
    return show(a) + " theorem=" + yes_no(adequate_thm) + " direct=" + yes_no(adequate_direct);
  });

  const bool e0 = is_E0(a).member;
  const bool r0 = is_R0(a).member;
  if (e0) {
    const bool reg = is_R(a).member;
    t.check("E0: R0 <=> R", r0 == reg, [&] { return show(a) + " R0=" + yes_no(r0) + " R=" + yes_no(reg); });
  }
  if (nd) t.check("principally non-degenerate => column competent", cc.member, [&] { return show(a); });
  if (cc.member && nd) t.check("column competent, minors nonzero => R0", r0, [&] { return show(a); });

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const Matrix pa = permute(a, perm);
  t.check("column competence is permutation invariant", is_column_competent(pa).member == cc.member,
          [&] { return show(a); });

  if (cc.member) {
    std::uniform_int_distribution<long> dd(1, 5);
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = Rational(dd(rng), dd(rng));
    const Matrix scaled = d * a * d;
    t.check("column competence survives D A D for positive diagonal D", is_column_competent(scaled).member,
            [&] { return show(a) + " D=" + d.str(); });

    for (auto mask : subsets_by_cardinality(n, false)) {
      const IndexSet alpha = IndexSet::from_mask(n, mask);
      if (det(a.principal(alpha)).is_zero()) continue;
      if (det(schur_complement(a, alpha)).is_zero()) continue;
      const Matrix p = ppt(a, alpha).transformed;
      t.check("ppt preserves column competence", is_column_competent(p).member,
              [&] { return show(a) + " alpha=" + alpha.str(); });
    }

    if (e0 && r0 && !det(a).is_zero()) {
      bool has_alpha = false;
      for (auto mask : subsets_by_cardinality(n, false)) {
        has_alpha = has_alpha || !det(a.principal(IndexSet::from_mask(n, mask))).is_zero();
      }
      if (has_alpha) {
        t.check("column competent, E0 and R0, nonsingular pivots => column adequate", adequate_thm,
                [&] { return show(a); });
      }
    }
  }

  if (is_Z(a).member) {
    for (int s = 0; s < 50; ++s) {
      const auto z = sample_psi_kernel(rng, a);
      if (!z) continue;
      Vector absz = *z;
      for (auto& x : absz) x = x.abs();
      const Vector az = a * *z;
      const bool hyp = is_nonnegative(a * absz) && is_nonnegative(-Rational(1) * az);
      if (hyp) t.check("Z-matrix: z o Az = 0, A|z| >= 0, Az <= 0 => Az = 0", is_zero(az),
                       [&] { return show(a) + " z=" + to_string(*z); });
    }
  }

  bool consistent = true;
  std::string what;
  try {
    classify(a);
  } catch (const InternalInconsistency& e) {
    consistent = false;
    what = e.what();
  }
  t.check("classification cross-checks hold", consistent, [&] { return show(a) + ": " + what; });
}

void lcp_invariants(Tally& t, const Matrix& a, const Vector& q) {
  const LCPInstance inst(a, q);
  const auto pieces = enumerate_solutions(inst);
  const auto lemke = lemke_solve(inst);
  bool agree = true;
  if (lemke.solution) {
    agree = is_solution(inst, *lemke.solution) &&
            std::any_of(pieces.begin(), pieces.end(),
                        [&](const auto& p) { return piece_contains(inst, p, lemke.solution->z); });
  }
  t.check("Lemke solutions lie in an enumerated piece", agree, [&] { return show(a, q); });

  for (const auto& piece : pieces) {
    const auto& sigma = piece.support;
    const bool rank_eq = rank(a.columns(sigma)) == rank(a.principal(sigma));
    t.check("piece w constant <=> rank A[:,s] = rank A_ss", piece.w_constant == rank_eq, [&] {
      return show(a, q) + " support=" + sigma.str() + " w_constant=" + yes_no(piece.w_constant);
    });

    bool ok = piece_contains(inst, piece, piece.particular.z) &&
              piece_contains(inst, piece, piece.relative_interior.z) &&
              piece.particular.w == q + a * piece.particular.z;
    bool w_const = true;
    Vector sum = zero_vector(inst.n());
    for (const auto& d : piece.ray_basis) {
      ok = ok && small_step_stays(inst, piece, d);
      w_const = w_const && is_zero(a * d);
      sum = sum + d;
    }
    if (!piece.ray_basis.empty()) ok = ok && small_step_stays(inst, piece, sum);
    ok = ok && w_const == piece.w_constant;
    t.check("piece points and directions stay in the piece", ok,
            [&] { return show(a, q) + " support=" + sigma.str(); });

    for (const Solution* s : {&piece.particular, &piece.relative_interior}) {
      t.check("f_A(u) = q for the preimage u of each solution", f_map(a, f_preimage(*s)) == q,
              [&] { return show(a, q) + " z=" + to_string(s->z); });
    }
  }

  const LCPInstance homogeneous(a, zero_vector(inst.n()));
  for (const auto& piece : enumerate_solutions(homogeneous)) {
    bool ok = is_zero(psi(a, piece.particular.z)) && is_zero(psi(a, piece.relative_interior.z));
    for (const auto& d : piece.ray_basis) ok = ok && is_zero(psi(a, piece.particular.z + d));
    t.check("psi vanishes on SOL(0, A)", ok, [&] { return show(a) + " support=" + piece.support.str(); });
  }
}

void degree_invariants(Tally& t, std::mt19937_64& rng, const Matrix& a, const Vector& q) {
  const std::size_t n = a.rows();
  if (is_q_nondegenerate(a, q)) {
    const auto deg = local_degree(a, q);
    const auto pieces = enumerate_solutions(LCPInstance(a, q));
    const bool zero_dim = std::all_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.dimension() == 0; });
    t.check("non-degenerate q: one 0-dimensional piece per interior cone",
            zero_dim && pieces.size() == deg.contributions.size(), [&] {
              return show(a, q) + " contributions=" + std::to_string(deg.contributions.size()) +
                     " pieces=" + std::to_string(pieces.size());
            });
    const Vector q2 = Rational(1001, 1000) * q;
    t.check("degree is stable under q -> (1 + 1/1000) q",
            is_q_nondegenerate(a, q2) && local_degree(a, q2).value == deg.value, [&] { return show(a, q); });
    if (is_P(a).member) {
      t.check("P-matrix: degree 1", deg.value == 1, [&] { return show(a, q); });
    }
  }
  const IndexSet beta = random_subset(rng, n, true);
  const auto rel = verify_ppt_degree_relation(a, q, beta);
  if (rel.preconditions_hold()) {
    t.check("deg_A'(q') = sgn det A_bb * deg_A(q)", rel.holds, [&] {
      return show(a, q) + " beta=" + beta.str() + " lhs=" + std::to_string(rel.lhs->value) +
             " rhs=" + std::to_string(rel.rhs->value);
    });
  }
}

void finite_w_evidence(Tally& t, std::mt19937_64& rng, long bound) {
  const std::string name = "column competent => finitely many w-solutions (sampled q)";
  std::string log;
  for (const auto& f : builtin_fixtures()) {
    const Matrix& a = f.doc.A;
    const bool cc = is_column_competent(a).member;
    std::size_t infinite = 0;
    for (int s = 0; s < 100; ++s) {
      const Vector q = random_vector(rng, a.rows(), bound);
      const auto w = w_solution_set(LCPInstance(a, q));
      if (!w.finite) ++infinite;
      if (cc) t.check(name, w.finite, [&] { return f.name + ": " + show(a, q); });
    }
    if (!cc) {
      if (!log.empty()) log += "; ";
      log += f.name + " (not column competent): " + std::to_string(infinite) + "/100 q with infinite w";
    }
  }
  t.note(name, log);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  check_enumeration_cap(options.n_max);
  VerifyReport report;
  report.options = options;
  Tally t;
  for (const char* name : {"rank + nullity = columns", "solve_linear solutions and certificates are exact",
                           "ppt is an involution", "schur complement = complementary block of ppt",
                           "det A = det A_aa * det(A/A_aa)", "lp_feasible witness satisfies the system",
                           "document round trip is exact", "column competence witnesses are sound",
                           "all principal minors nonzero <=> every principal kernel trivial",
                           "column adequate <=> column competent and P0", "E0: R0 <=> R",
                           "principally non-degenerate => column competent",
                           "column competent, minors nonzero => R0",
                           "column competence is permutation invariant",
                           "column competence survives D A D for positive diagonal D",
                           "ppt preserves column competence",
                           "column competent, E0 and R0, nonsingular pivots => column adequate",
                           "classification cross-checks hold", "Lemke solutions lie in an enumerated piece",
                           "piece w constant <=> rank A[:,s] = rank A_ss",
                           "piece points and directions stay in the piece",
                           "f_A(u) = q for the preimage u of each solution", "psi vanishes on SOL(0, A)",
                           "non-degenerate q: one 0-dimensional piece per interior cone",
                           "degree is stable under q -> (1 + 1/1000) q", "P-matrix: degree 1",
                           "deg_A'(q') = sgn det A_bb * deg_A(q)"}) {
    t.declare(name);
  }
  t.declare("Z-matrix: z o Az = 0, A|z| >= 0, Az <= 0 => Az = 0", true);
  t.declare("column competent => finitely many w-solutions (sampled q)", true);

  std::mt19937_64 rng(options.seed);
  const std::size_t lo = options.n_max >= 2 ? 2 : 1;
  std::uniform_int_distribution<std::size_t> ndist(lo, std::max(lo, options.n_max));
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t n = ndist(rng);
    const Matrix a = random_matrix(rng, n, options.entry_bound);
    const Vector q = random_vector(rng, n, options.entry_bound);

    const MatrixDocument doc{n, a, q};
    t.check("document round trip is exact", parse_document(serialize_document(doc)) == doc,
            [&] { return show(a, q); });
    linalg_invariants(t, rng, a, options.entry_bound);
    class_invariants(t, rng, a);
    lcp_invariants(t, a, q);
    degree_invariants(t, rng, a, q);
  }
  if (options.trials > 0) finite_w_evidence(t, rng, options.entry_bound);

  report.invariants = t.take();
  if (options.fixtures) report.claims = replay_fixture_claims();
  return report;
}

namespace {

std::string span(const std::vector<Vector>& basis) {
  std::string s = "span{";
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? "," : "") + to_string(basis[i]);
  return s + "}";
}

std::string witness(const ClassVerdict& v) {
  return v.witness_vector ? to_string(primitive(*v.witness_vector)) : "none";
}

}  // namespace

std::vector<ClaimOutcome> replay_fixture_claims() {
  std::vector<ClaimOutcome> out;
  auto claim = [&](const std::string& fixture, const std::string& what, const std::string& expected,
                   const std::string& actual) { out.push_back({fixture, what, expected, actual}); };
  auto A = [](const char* name) -> const Matrix& { return builtin_fixture(name).doc.A; };

  claim("singular_cc", "column competent", "yes", yes_no(is_column_competent(A("singular_cc")).member));
  claim("not_cc_2x2", "column competent", "no", yes_no(is_column_competent(A("not_cc_2x2")).member));
  {
    const auto v = is_column_competent(A("nonsingular_not_cc"));
    claim("nonsingular_not_cc", "column competent", "no", yes_no(v.member));
    claim("nonsingular_not_cc", "witness z", "(0,0,1)", witness(v));
    claim("nonsingular_not_cc", "psi(z) for z=(0,0,1)", "(0,0,0)",
          to_string(psi(A("nonsingular_not_cc"), Vector{0, 0, 1})));
    claim("nonsingular_not_cc", "nonsingular", "yes", yes_no(!det(A("nonsingular_not_cc")).is_zero()));
  }
  claim("cc_not_p0", "column competent", "yes", yes_no(is_column_competent(A("cc_not_p0")).member));
  claim("cc_not_p0", "P0", "no", yes_no(is_P0(A("cc_not_p0")).member));
  claim("cc_not_p0", "column adequate", "no",
        yes_no(is_column_adequate(A("cc_not_p0"), AdequacyMode::Checked).member));
  {
    const Matrix& a = A("cc_p0");
    claim("cc_p0", "column competent", "yes", yes_no(is_column_competent(a).member));
    claim("cc_p0", "P0", "yes", yes_no(is_P0(a).member));
    claim("cc_p0", "P", "no", yes_no(is_P(a).member));
    claim("cc_p0", "column adequate", "yes", yes_no(is_column_adequate(a, AdequacyMode::Checked).member));
    const auto r0 = is_R0(a);
    claim("cc_p0", "R0", "no", yes_no(r0.member));
    claim("cc_p0", "R0 witness z", "(1,2)", witness(r0));
    claim("cc_p0", "kernel", "span{(1,2)}", span(null_space_basis(a)));
  }
  claim("r0_not_cc", "R0", "yes", yes_no(is_R0(A("r0_not_cc")).member));
  claim("r0_not_cc", "column competent", "no", yes_no(is_column_competent(A("r0_not_cc")).member));
  {
    const Matrix& a = A("cc_not_adequate");
    claim("cc_not_adequate", "column competent", "yes", yes_no(is_column_competent(a).member));
    claim("cc_not_adequate", "column adequate", "no",
          yes_no(is_column_adequate(a, AdequacyMode::Checked).member));
    claim("cc_not_adequate", "kernel", "span{(2,3,1)}", span(null_space_basis(a)));
    claim("cc_not_adequate", "ppt on the empty set", a.str(), ppt(a, IndexSet::from_mask(3, 0)).transformed.str());
  }
  {
    const auto& f = builtin_fixture("wunique_2x2");
    const LCPInstance inst(f.doc.A, *f.doc.q);
    claim(f.name, "z=(4,1) is a solution with w=(0,0)", "yes",
          yes_no(is_solution(inst, Solution{Vector{0, 0}, Vector{4, 1}})));
    const auto w = w_solution_set(inst);
    claim(f.name, "w-solution set", "{(0,0)}",
          w.finite && w.w_values.size() == 1 ? "{" + to_string(w.w_values.front()) + "}" : "infinite");
  }
  {
    const auto& f = builtin_fixture("wunique_3x3");
    const LCPInstance inst(f.doc.A, *f.doc.q);
    claim(f.name, "z=(4,4,1) is a solution with w=(0,0,0)", "yes",
          yes_no(is_solution(inst, Solution{Vector{0, 0, 0}, Vector{4, 4, 1}})));
    claim(f.name, "column competent", "yes", yes_no(is_column_competent(f.doc.A).member));
    claim(f.name, "kernel", "span{(2,1,1)}", span(null_space_basis(f.doc.A)));
    claim(f.name, "w-solution set finite", "yes", yes_no(w_solution_set(inst).finite));
  }
  claim("(any)", "det of the empty principal submatrix", "1", det(Matrix(0, 0)).str());
  return out;
}

}  // namespace compmat
