#include "linarr/syzygy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "linarr/linalg.hpp"

namespace linarr {

namespace {

// C(n, 2) as the polynomial n(n-1)/2, valid for every integer n.
long binom2(long n) { return n * (n - 1) / 2; }

long dim_s(int k) { return static_cast<long>(num_monomials(3, k)); }

Monomial add(const Monomial& m, const Monomial& n) { return {m.a + n.a, m.b + n.b, m.c + n.c}; }

const Monomial kVars[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

// Kernel of the map sum_i mu_i g_i, (mu_i in S_{k - deg g_i}) -> S_k^3.
// Columns are blocks (i, monomial of degree k - deg g_i) in generator order.
struct RelationSpace {
  std::vector<int> offsets;  // column offset of block i, or -1 when k < deg g_i
  std::size_t ncols = 0;
};

RelationSpace relation_space(const std::vector<Derivation>& gens, int k) {
  RelationSpace rs;
  for (const auto& g : gens) {
    int e = k - g.degree();
    if (e < 0) {
      rs.offsets.push_back(-1);
      continue;
    }
    rs.offsets.push_back(static_cast<int>(rs.ncols));
    rs.ncols += num_monomials(3, e);
  }
  return rs;
}

std::vector<Vector> relation_kernel(const FieldPtr& field, const std::vector<Derivation>& gens, int k,
                                    const RelationSpace& rs) {
  const std::size_t nk = num_monomials(3, k);
  std::vector<SparseVector> rows(3 * nk);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (rs.offsets[i] < 0) continue;
    const int e = k - gens[i].degree();
    const auto mons = monomials(3, e);
    const HomPoly* comps[3] = {&gens[i].a, &gens[i].b, &gens[i].c};
    for (int comp = 0; comp < 3; ++comp) {
      for (const auto& [key, coeff] : comps[comp]->terms()) {
        const Monomial nu = HomPoly::unpack(key);
        for (std::size_t j = 0; j < mons.size(); ++j) {
          std::size_t row = comp * nk + monomial_index(3, add(mons[j], nu));
          rows[row].emplace_back(rs.offsets[i] + j, coeff);
        }
      }
    }
  }
  Echelon ech(field, rs.ncols);
  for (const auto& r : rows)
    if (!r.empty()) ech.insert(r);
  return ech.kernel();
}

// Multiplies a relation vector of degree k by a variable, giving degree k+1.
Vector shift_relation(const FieldPtr& field, const std::vector<Derivation>& gens, int k, const RelationSpace& from,
                      const RelationSpace& to, const Vector& v, const Monomial& var) {
  Vector out = zero_vector(field, to.ncols);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (from.offsets[i] < 0) continue;
    const auto mons = monomials(3, k - gens[i].degree());
    for (std::size_t j = 0; j < mons.size(); ++j) {
      const auto& c = v[from.offsets[i] + j];
      if (c.is_zero()) continue;
      out[to.offsets[i] + monomial_index(3, add(mons[j], var))] = c;
    }
  }
  return out;
}

}  // namespace

GradedBasis graded_piece(const HomPoly& f, int k) {
  GradedBasis out;
  out.degree = k;
  if (k < 0) return out;
  const FieldPtr& field = f.field();
  const int d = f.degree();
  const std::size_t n = num_monomials(3, k);
  const std::size_t ntarget = num_monomials(3, k + d - 1);
  const auto mons = monomials(3, k);
  std::vector<SparseVector> rows(ntarget);
  for (int comp = 0; comp < 3; ++comp) {
    const HomPoly fc = f.partial(comp);
    for (const auto& [key, coeff] : fc.terms()) {
      const Monomial mu = HomPoly::unpack(key);
      for (std::size_t i = 0; i < n; ++i) rows[monomial_index(3, add(mons[i], mu))].emplace_back(comp * n + i, coeff);
    }
  }
  Echelon ech(field, 3 * n);
  for (const auto& r : rows)
    if (!r.empty()) ech.insert(r);
  for (const auto& v : ech.kernel()) out.elements.push_back(Derivation::from_flat(field, k, v));
  return out;
}

SyzygyModule::SyzygyModule(HomPoly f, int max_degree) : f_(std::move(f)), max_degree_(max_degree) {
  if (f_.nvars() != 3 || f_.degree() < 2) throw MathError("syzygy module needs a ternary form of degree >= 2");
  if (max_degree_ < 0) max_degree_ = f_.degree() - 1;
  const FieldPtr& field = f_.field();
  for (int k = 0; k <= max_degree_; ++k) {
    pieces_.push_back(graded_piece(f_, k).elements);
    Echelon ech(field, 3 * num_monomials(3, k));
    if (k > 0)
      for (const auto& b : pieces_[k - 1])
        for (int v = 0; v < 3; ++v) ech.insert((b * HomPoly::variable(field, 3, v)).flat());
    for (const auto& b : pieces_[k])
      if (ech.insert(b.flat())) generators_.push_back(b);
  }
}

const std::vector<Derivation>& SyzygyModule::basis(int k) const {
  static const std::vector<Derivation> empty;
  if (k < 0) return empty;
  if (k > max_degree_) throw MathError("degree " + std::to_string(k) + " beyond computed range");
  return pieces_[k];
}

int SyzygyModule::mdr() const {
  for (int k = 0; k <= max_degree_; ++k)
    if (!pieces_[k].empty()) return k;
  throw MathError("no syzygy up to degree " + std::to_string(max_degree_));
}

std::vector<int> SyzygyModule::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : generators_) out.push_back(g.degree());
  return out;
}

RelationData relation_degrees(const SyzygyModule& m) {
  RelationData out;
  const auto& gens = m.generators();
  const auto degs = m.generator_degrees();
  const FieldPtr& field = m.poly().field();
  if (gens.size() <= 2) return out;
  if (m.max_degree() < m.d() - 1) throw MathError("relation degrees need degrees up to d-1");
  RelationSpace prev_space;
  std::vector<Vector> prev;
  int prev_k = -2;
  for (int k = 0; k <= m.max_degree(); ++k) {
    long total = 0;
    for (int dg : degs) total += dim_s(k - dg);
    const long expected = total - m.dim(k);
    RelationSpace space = relation_space(gens, k);
    if (expected == 0) {
      prev.clear();
      prev_k = -2;
      continue;
    }
    std::vector<Vector> ker = relation_kernel(field, gens, k, space);
    if (static_cast<long>(ker.size()) != expected) throw InternalError("relation kernel dimension mismatch");
    std::size_t lifted = 0;
    if (prev_k == k - 1) {
      Echelon ech(field, space.ncols);
      for (const auto& v : prev)
        for (const auto& var : kVars) ech.insert(shift_relation(field, gens, k - 1, prev_space, space, v, var));
      lifted = ech.rank();
    }
    for (std::size_t i = lifted; i < ker.size(); ++i) out.degrees.push_back(k);
    prev = std::move(ker);
    prev_space = std::move(space);
    prev_k = k;
  }
  if (out.degrees.size() != gens.size() - 2)
    throw InternalError("expected " + std::to_string(gens.size() - 2) + " relations, found " +
                        std::to_string(out.degrees.size()));
  for (std::size_t j = 0; j < out.degrees.size(); ++j) out.epsilons.push_back(out.degrees[j] - degs[j + 2]);
  return out;
}

int sigma_from_resolution(const SyzygyModule& m) {
  const auto rel = relation_degrees(m);
  if (rel.degrees.empty()) throw MathError("sigma undefined (N(f)=0)");
  return 2 * (m.d() - 1) - rel.degrees.back();
}

SyzygyProfile syzygy_profile(const SyzygyModule& m) {
  SyzygyProfile p;
  for (int k = 0; k <= m.max_degree(); ++k) p.dims.push_back(m.dim(k));
  p.mdr = m.mdr();
  p.gen_degrees = m.generator_degrees();
  const auto rel = relation_degrees(m);
  p.rel_degrees = rel.degrees;
  p.epsilons = rel.epsilons;
  if (!rel.degrees.empty()) p.sigma = 2 * (m.d() - 1) - rel.degrees.back();
  p.free = p.gen_degrees.size() == 2;
  if (p.free) p.exponents = std::make_pair(p.gen_degrees[0], p.gen_degrees[1]);
  return p;
}

long dim_extended(const SyzygyModule& m, long tau, int j) {
  if (j < 0) return 0;
  if (j <= m.max_degree()) return m.dim(j);
  const int d = m.d();
  if (j < d - 3) throw MathError("degree " + std::to_string(j) + " not computed");
  return tau + 3 * binom2(j + 2) - binom2(d + j + 1);
}

std::vector<long> n_hilbert(const SyzygyModule& m, long tau) {
  const int d = m.d();
  const int T = 3 * d - 6;
  std::vector<long> n(std::max(T + 1, 0), 0);
  for (int j = 0; j <= T; ++j) {
    const int k = j - d;
    n[j] = dim_extended(m, tau, k + 1) + dim_extended(m, tau, d - 5 - k) -
           (tau + 3 * binom2(k + 3) - binom2(d + k + 2));
    if (n[j] < 0) throw InternalError("negative Jacobian module dimension in degree " + std::to_string(j));
  }
  return n;
}

Freeness is_free(const Arrangement& a, const SyzygyModule& m) {
  if (m.max_degree() < m.d() - 2) throw MathError("freeness needs degrees up to d-2");
  Freeness out;
  const auto degs = m.generator_degrees();
  out.free = degs.size() == 2;
  const long d = m.d();
  const long d1 = m.mdr();
  const bool by_tau = 2 * d1 <= d - 1 && a.tau() == (d - 1) * (d - 1) - d1 * (d - 1 - d1);
  if (out.free != by_tau) throw InternalError("generator count and tau criterion disagree on freeness");
  if (out.free) out.exponents = std::make_pair(degs[0], degs[1]);
  return out;
}

Report dims_theorem_check(const Arrangement& a, const SyzygyModule& m) {
  Report r("thmD", "");
  const long d = m.d();
  const long tau = a.tau();
  for (long j = std::max(0L, d - 3); j <= d - 1 && j <= m.max_degree(); ++j) {
    long expected = tau + 3 * binom2(j + 2) - binom2(d + j + 1);
    long got = m.dim(static_cast<int>(j));
    r.expect("thmD.dim" + std::to_string(j), got == expected,
             "dim " + std::to_string(got) + ", combinatorial " + std::to_string(expected))
        .fact("degree", j)
        .fact("dim", got);
  }
  long sum3 = 0;
  bool only_doubles = true;
  for (const auto& p : a.lattice()) {
    sum3 += binom2(p.multiplicity - 1);
    if (p.multiplicity > 2) only_doubles = false;
  }
  if (d >= 3 && d - 3 <= m.max_degree()) {
    long got = m.dim(static_cast<int>(d - 3));
    r.expect("corD.1", got == sum3, "dim D_{d-3} = " + std::to_string(got) + ", sum = " + std::to_string(sum3));
    r.expect("corD.1-nodal", (got == 0) == only_doubles);
  }
  if (d >= 2 && d - 2 <= m.max_degree()) {
    long got = m.dim(static_cast<int>(d - 2));
    r.expect("corD.2", got == sum3 + d - 1,
             "dim D_{d-2} = " + std::to_string(got) + ", expected " + std::to_string(sum3 + d - 1));
    r.expect("corD.2-nodal", (got == d - 1) == only_doubles);
  }
  return r;
}

Report lower_bound_check(const Arrangement& a, const SyzygyModule& m) {
  Report r("cor20", "");
  const int d = m.d();
  for (int j = 4; d - j >= 0; ++j) {
    if (d - j > m.max_degree()) continue;
    long bound = 0;
    for (const auto& p : a.lattice())
      if (p.multiplicity >= j) bound += binom2(p.multiplicity - j + 2);
    long got = m.dim(d - j);
    r.expect("cor20.j" + std::to_string(j), got >= bound,
             "dim " + std::to_string(got) + " >= " + std::to_string(bound));
  }
  return r;
}

Report n_hilbert_check(const Arrangement& a, const SyzygyModule& m) {
  Report r("nhilbert", "");
  const int d = m.d();
  const int T = 3 * d - 6;
  const auto n = n_hilbert(m, a.tau());
  std::ostringstream vals;
  for (std::size_t j = 0; j < n.size(); ++j) vals << (j ? "," : "") << n[j];

  bool dual = true;
  for (int k = 0; k <= T; ++k) dual = dual && n[k] == n[T - k];
  r.expect("nhilbert.duality", dual).fact("values", vals.str());

  bool unimodal = true;
  const int mid = (T + 1) / 2;
  for (int k = 1; k <= T; ++k) {
    if (k <= mid) unimodal = unimodal && n[k - 1] <= n[k];
    else unimodal = unimodal && n[k - 1] >= n[k];
  }
  r.expect("nhilbert.unimodal", unimodal);
  if (2 * d - 4 <= T) r.expect("nhilbert.vanish", n[2 * d - 4] == 0, "n_{2d-4} = " + std::to_string(n[2 * d - 4]));

  const auto rel = relation_degrees(m);
  const auto degs = m.generator_degrees();
  r.expect("castelnuovo", (degs.empty() || degs.back() <= d - 2) && (rel.degrees.empty() || rel.degrees.back() <= d - 1));
  bool eps = std::all_of(rel.epsilons.begin(), rel.epsilons.end(), [](int e) { return e >= 1; });
  r.expect("epsilon.positive", eps);

  auto first = std::find_if(n.begin(), n.end(), [](long v) { return v != 0; });
  if (rel.degrees.empty()) {
    r.expect("nhilbert.free-zero", first == n.end());
  } else {
    int sigma = 2 * (d - 1) - rel.degrees.back();
    int init = first == n.end() ? -1 : static_cast<int>(first - n.begin());
    r.expect("nhilbert.sigma", init == sigma, "initial degree " + std::to_string(init) + ", sigma " + std::to_string(sigma))
        .fact("sigma", sigma);
    r.expect("sigma.bound", sigma >= d - 1);
  }
  return r;
}

}  // namespace linarr
