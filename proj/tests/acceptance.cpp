// Acceptance checks. Usage: acceptance <criterion 1..9>. Prints one line and
// exits nonzero when the criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "compmat/classes.hpp"
#include "compmat/degree.hpp"
#include "compmat/lcp.hpp"
#include "compmat/linalg.hpp"
#include "oracles.hpp"

using namespace compmat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit_ms = 0;  // 0 means no time bound

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

// w = q + Az, w ≥ 0, z ≥ 0, wᵀz = 0, recomputed entry by entry.
bool independently_valid(const Matrix& a, const Vector& q, const Vector& z, const Vector& w) {
  const std::size_t n = q.size();
  if (z.size() != n || w.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational wi = q[i];
    for (std::size_t j = 0; j < n; ++j) wi += a(i, j) * z[j];
    if (wi != w[i] || w[i].is_negative() || z[i].is_negative()) return false;
    if (!(w[i] * z[i]).is_zero()) return false;
  }
  return true;
}

Matrix permuted(const Matrix& a, const std::vector<std::size_t>& p) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(p[i], p[j]);
  return out;
}

Outcome criterion_1() {
  Outcome o{true, "", 1000};
  auto cc = [](const Matrix& a) { return is_column_competent(a); };
  o.require(cc(Matrix{{1, 0}, {1, 0}}).member, "[[1,0],[1,0]] CC=no");
  o.require(!cc(Matrix{{1, 1}, {0, 0}}).member, "[[1,1],[0,0]] CC=yes");
  {
    const Matrix a{{1, 4, 3}, {2, 1, 5}, {3, 2, 0}};
    const auto v = cc(a);
    o.require(!v.member, "[[1,4,3],[2,1,5],[3,2,0]] CC=yes");
    o.require(v.witness_vector && *v.witness_vector == Vector{0, 0, 1},
              "[[1,4,3],[2,1,5],[3,2,0]] witness is not (0,0,1)");
    o.require(is_zero(psi(a, Vector{0, 0, 1})) && !is_zero(a * Vector{0, 0, 1}),
              "(0,0,1) is not a competence witness");
  }
  {
    const Matrix a{{2, 1}, {1, -1}};
    o.require(cc(a).member && oracle::is_column_competent(a), "[[2,1],[1,-1]] CC=no");
    o.require(!is_P0(a).member && !oracle::is_P0(a), "[[2,1],[1,-1]] P0=yes");
  }
  {
    const Matrix a{{2, -1}, {-4, 2}};
    o.require(cc(a).member, "[[2,-1],[-4,2]] CC=no");
    o.require(is_P0(a).member, "[[2,-1],[-4,2]] P0=no");
    o.require(is_column_adequate(a, AdequacyMode::Checked).member, "[[2,-1],[-4,2]] adequate=no");
    const auto r0 = is_R0(a);
    o.require(!r0.member, "[[2,-1],[-4,2]] R0=yes");
    o.require(r0.witness_vector && *r0.witness_vector == Vector{1, 2}, "[[2,-1],[-4,2]] R0 witness is not (1,2)");
  }
  {
    const Matrix a{{1, 1, 4}, {2, 2, 5}, {3, 4, 1}};
    o.require(is_R0(a).member, "[[1,1,4],[2,2,5],[3,4,1]] R0=no");
    o.require(!cc(a).member, "[[1,1,4],[2,2,5],[3,4,1]] CC=yes");
  }
  {
    const Matrix a{{3, -2, 0}, {-2, 1, 1}, {-3, 2, 0}};
    const auto v = cc(a);
    std::string why = "[[3,-2,0],[-2,1,1],[-3,2,0]] CC=" + yn(v.member) + " (expected yes";
    if (v.witness_vector) why += "; z=" + to_string(*v.witness_vector) + " gives z*Az=0, Az=" + to_string(a * *v.witness_vector);
    o.require(v.member, why + ")");
    o.require(!is_column_adequate(a, AdequacyMode::Checked).member, "[[3,-2,0],[-2,1,1],[-3,2,0]] adequate=yes");
    const auto k = null_space_basis(a);
    o.require(k.size() == 1 && k[0] == Vector{2, 3, 1}, "[[3,-2,0],[-2,1,1],[-3,2,0]] kernel is not span{(2,3,1)}");
  }
  if (o.ok) o.detail = "7 fixtures, all verdicts and witnesses match";
  return o;
}

Outcome criterion_2() {
  Outcome o{true, "", 1000};
  const Matrix a{{-1, 3}, {2, -6}};
  const Vector q{1, -2};
  const LCPInstance inst(a, q);
  const auto pieces = enumerate_solutions(inst);
  o.require(pieces.size() == 1, std::to_string(pieces.size()) + " pieces");
  if (pieces.size() == 1) {
    const auto& p = pieces[0];
    o.require(p.particular.z == Vector{1, 0}, "vertex " + to_string(p.particular.z));
    o.require(p.ray_basis.size() == 1 && p.ray_basis[0] == Vector{3, 1}, "ray basis differs from {(3,1)}");
    o.require(p.w_constant && p.particular.w == Vector{0, 0}, "w not constant (0,0)");
    o.require(piece_contains(inst, p, Vector{4, 1}), "(4,1) not in the piece");
    o.require(independently_valid(a, q, Vector{4, 1}, Vector{0, 0}), "(4,1) is not a solution");
    // t = 301/300 is the exact ray point the decimals (4.0100, 1.0033) round.
    const Vector zt = Vector{1, 0} + Rational(301, 300) * Vector{3, 1};
    o.require(piece_contains(inst, p, zt), "ray point t=301/300 not in the piece");
    o.require(!piece_contains(inst, p, Vector{Rational(401, 100), Rational(10033, 10000)}),
              "rounded decimals accepted as exact");
  }
  const auto w = w_solution_set(inst);
  o.require(w.finite && w.w_values.size() == 1 && w.w_values[0] == Vector{0, 0}, "w-solution set is not {(0,0)}");
  if (o.ok) o.detail = "one piece (1,0)+t(3,1), w=(0,0), (4,1) at t=1";
  return o;
}

Outcome criterion_3() {
  Outcome o{true, "", 1000};
  const Matrix a{{-2, 1, 3}, {4, -2, -6}, {1, -1, -1}};
  const Vector q{1, -2, 1};
  const LCPInstance inst(a, q);
  const auto v = is_column_competent(a);
  std::string cc = "CC=" + yn(v.member) + " (expected yes";
  if (v.witness_vector) cc += "; z=" + to_string(*v.witness_vector) + " has z*Az=0, Az=" + to_string(a * *v.witness_vector);
  o.require(v.member, cc + ")");
  o.require(v.member == oracle::is_column_competent(a), "oracle disagrees on CC");
  o.require(independently_valid(a, q, Vector{4, 4, 1}, Vector{0, 0, 0}), "(4,4,1) with w=0 is not a solution");
  const auto pieces = enumerate_solutions(inst);
  const bool contained = std::any_of(pieces.begin(), pieces.end(), [&](const auto& p) {
    return piece_contains(inst, p, Vector{4, 4, 1}) && p.particular.w == Vector{0, 0, 0} && p.w_constant;
  });
  o.require(contained, "no piece contains (4,4,1) with w=0");
  o.require(is_zero(a * Vector{2, 1, 1}), "(2,1,1) is not in ker A");
  const auto k = null_space_basis(a);
  o.require(k.size() == 1 && k[0] == Vector{2, 1, 1}, "kernel is not span{(2,1,1)}");
  const auto w = w_solution_set(inst);
  std::string fin = "w-solution set finite=" + yn(w.finite);
  if (w.infinite_witness) {
    const auto& p = *w.infinite_witness;
    fin += " (piece support " + p.support.str() + " from " + to_string(p.particular.z) + " along " +
           (p.ray_basis.empty() ? std::string("-") : to_string(p.ray_basis[0])) + " changes w)";
  }
  o.require(w.finite, fin);
  if (o.ok) o.detail = "CC, (4,4,1) in a w=0 piece, kernel (2,1,1), finite w set";
  return o;
}

template <class Body>
std::size_t sample(std::uint64_t seed, std::size_t count, std::size_t n_lo, std::size_t n_hi, Body body) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nd(n_lo, n_hi);
  std::size_t done = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t n = nd(rng);
    done += body(rng, oracle::random_matrix(rng, n, 5)) ? 1 : 0;
  }
  return done;
}

Outcome criterion_4() {
  Outcome o{true, "", 120000};
  std::size_t members = 0, disagreements = 0;
  std::string first;
  const std::size_t total = sample(401, 600, 2, 4, [&](std::mt19937_64&, const Matrix& a) {
    const bool thm = is_column_adequate(a, AdequacyMode::Theorem).member;
    const bool direct = is_column_adequate(a, AdequacyMode::Direct).member;
    members += thm;
    if (thm != direct && disagreements++ == 0) first = a.str();
    return true;
  });
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements, first " + first);
  o.require(members > 0, "no adequate matrices sampled");
  if (o.ok) o.detail = std::to_string(total) + " matrices, " + std::to_string(members) + " adequate, 0 disagreements";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::size_t e0 = 0, r0 = 0, disagreements = 0;
  std::string first;
  const std::size_t total = sample(501, 600, 1, 3, [&](std::mt19937_64&, const Matrix& a) {
    if (!is_E0(a).member) return true;
    ++e0;
    const bool x = is_R0(a).member;
    r0 += x;
    if (x != is_R(a).member && disagreements++ == 0) first = a.str();
    return true;
  });
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements, first " + first);
  o.require(e0 > 0 && r0 < e0 && r0 > 0, "corpus lacks both R0 and non-R0 members of E0");
  if (o.ok)
    o.detail = std::to_string(e0) + " E0 of " + std::to_string(total) + " (" + std::to_string(r0) +
               " R0), 0 disagreements";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::mt19937_64 rng(601);
  std::size_t tested = 0, attempts = 0, negative = 0, failures = 0;
  std::string first;
  while (tested < 500 && attempts < 20000) {
    ++attempts;
    const std::size_t n = 1 + rng() % 3;
    const Matrix a = oracle::random_matrix(rng, n);
    const Vector q = oracle::random_vector(rng, n);
    const IndexSet beta = IndexSet::from_mask(n, 1 + rng() % ((std::uint64_t{1} << n) - 1));
    const auto r = verify_ppt_degree_relation(a, q, beta);
    if (!r.preconditions_hold()) continue;
    ++tested;
    negative += r.pivot_det_sign < 0;
    // Independent degrees from the cofactor cone census.
    const auto lhs = oracle::cone_census(*r.transformed_a, *r.transformed_q);
    const auto rhs = oracle::cone_census(a, q);
    const bool ok = r.holds && lhs.degree == r.pivot_det_sign * rhs.degree && lhs.degree == r.lhs->value;
    if (!ok && failures++ == 0) first = a.str() + " q=" + to_string(q) + " beta=" + beta.str();
  }
  o.require(tested >= 500, "only " + std::to_string(tested) + " triples passed the preconditions");
  o.require(failures == 0, std::to_string(failures) + " failures, first " + first);
  if (o.ok) o.detail = std::to_string(tested) + " triples (" + std::to_string(negative) + " with det A_bb < 0), exact";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t checks = 0;
  auto fail = [&](const std::string& what, const Matrix& a) { o.require(false, what + " at " + a.str()); };
  const std::size_t total = sample(701, 600, 1, 4, [&](std::mt19937_64& rng, const Matrix& a) {
    const std::size_t n = a.rows();
    const bool cc = is_column_competent(a).member;
    const bool nd = oracle::is_nondegenerate(a);
    if (cc != oracle::is_column_competent(a)) fail("CC disagrees with oracle", a);
    if (nd && !cc) fail("non-degenerate but not CC", a);
    if (nd && cc && !is_R0(a).member) fail("CC with nonzero minors but not R0", a);
    checks += 3;

    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_column_competent(permuted(a, p)).member != cc) fail("permutation changes CC", a);
      ++checks;
    } while (std::next_permutation(p.begin(), p.end()));

    if (cc) {
      Matrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = Rational(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 9));
      if (!is_column_competent(d * a * d).member) fail("D A D not CC", a);
      ++checks;
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const IndexSet alpha = IndexSet::from_mask(n, m);
        if (oracle::det(a.principal(alpha)).is_zero()) continue;
        if (det(schur_complement(a, alpha)).is_zero()) continue;
        if (!oracle::is_column_competent(ppt(a, alpha).transformed)) fail("ppt leaves CC at " + alpha.str(), a);
        ++checks;
      }
    }

    if (n <= 3) {
      const Vector q = oracle::random_vector(rng, n);
      for (const auto& piece : enumerate_solutions(LCPInstance(a, q))) {
        const auto& s = piece.support;
        const bool rank_eq = oracle::rank(a.columns(s)) == oracle::rank(a.principal(s));
        bool moves = false;
        for (const auto& dir : piece.ray_basis) moves = moves || !is_zero(a * dir);
        if (piece.w_constant != rank_eq) fail("w_constant != rank equality, support " + s.str(), a);
        if (piece.w_constant == moves) fail("w_constant inconsistent with directions", a);
        checks += 2;
      }
    }
    return true;
  });
  if (o.ok) o.detail = std::to_string(total) + " matrices, " + std::to_string(checks) + " checks, 0 failures";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::mt19937_64 rng(801);
  std::size_t tested = 0, attempts = 0;
  while (tested < 250 && attempts < 5000) {
    ++attempts;
    const std::size_t n = 1 + rng() % 3;
    const Matrix a = oracle::random_matrix(rng, n);
    const Vector q = oracle::random_vector(rng, n);
    if (!is_q_nondegenerate(a, q)) continue;
    ++tested;
    const auto deg = local_degree(a, q);
    const auto pieces = enumerate_solutions(LCPInstance(a, q));
    const auto census = oracle::cone_census(a, q);
    const bool zero_dim = std::all_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.dimension() == 0; });
    if (deg.contributions.size() != pieces.size() || !zero_dim || deg.value != census.degree ||
        pieces.size() != census.interior) {
      o.require(false, a.str() + " q=" + to_string(q));
    }
  }
  o.require(tested >= 200, "only " + std::to_string(tested) + " non-degenerate pairs");
  const auto m = local_degree(-Matrix::identity(2), Vector{1, 1});
  std::vector<int> idx;
  for (const auto& c : m.contributions) idx.push_back(c.index);
  o.require(m.value == 0 && idx == std::vector<int>{1, -1, -1, 1}, "-I, q=(1,1) degree " + std::to_string(m.value));
  if (o.ok) o.detail = std::to_string(tested) + " pairs match; -I, q=(1,1): degree 0 from (+1,-1,-1,+1)";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  std::mt19937_64 rng(901);
  std::size_t solvable = 0, by_lemke = 0, by_fallback = 0, attempts = 0;
  while (solvable < 250 && attempts < 5000) {
    ++attempts;
    const std::size_t n = 1 + rng() % 3;
    const Matrix a = oracle::random_matrix(rng, n);
    const Vector q = oracle::random_vector(rng, n);
    const LCPInstance inst(a, q);
    const auto pieces = enumerate_solutions(inst);
    for (const auto& p : pieces) {
      if (!independently_valid(a, q, p.particular.z, p.particular.w)) o.require(false, "invalid piece vertex " + a.str());
    }
    const auto lemke = lemke_solve(inst);
    if (lemke.solution) {
      if (!independently_valid(a, q, lemke.solution->z, lemke.solution->w))
        o.require(false, "invalid Lemke solution " + a.str() + " q=" + to_string(q));
    }
    if (pieces.empty()) continue;
    ++solvable;
    if (lemke.solution) {
      ++by_lemke;
    } else {
      // The fallback re-runs enumeration; the reported solution is the first vertex.
      const auto again = enumerate_solutions(inst);
      if (again.empty()) o.require(false, "no solution reported for " + a.str() + " q=" + to_string(q));
      else if (!independently_valid(a, q, again[0].particular.z, again[0].particular.w))
        o.require(false, "invalid fallback solution " + a.str());
      else ++by_fallback;
    }
  }
  o.require(solvable >= 200, "only " + std::to_string(solvable) + " solvable instances");
  if (o.ok)
    o.detail = std::to_string(solvable) + " solvable: " + std::to_string(by_lemke) + " by Lemke, " +
               std::to_string(by_fallback) + " by fallback, all re-verified";
  return o;
}

const char* const kTitles[] = {
    "", "fixture verdicts", "instance 1: ray of solutions with one w", "instance 2: z=(4,4,1)",
    "adequacy: theorem vs direct", "E0: R0 <=> R", "ppt degree relation", "structural invariants",
    "degree cross-check", "Lemke validity"};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <1..9>\n";
    return 2;
  }
  const int k = std::atoi(argv[1]);
  const std::function<Outcome()> runs[] = {nullptr,     criterion_1, criterion_2, criterion_3, criterion_4,
                                           criterion_5, criterion_6, criterion_7, criterion_8, criterion_9};
  if (k < 1 || k > 9) {
    std::cerr << "unknown criterion " << argv[1] << "\n";
    return 2;
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome o = runs[k]();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.limit_ms > 0 && ms > o.limit_ms) o.require(false, "took longer than " + std::to_string(o.limit_ms) + " ms");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << kTitles[k] << " -- " << o.detail << " ("
       << ms << " ms)";
  std::cout << line.str() << std::endl;
  return o.ok ? 0 : 1;
}
