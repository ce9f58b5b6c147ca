#include "loopdual/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace loopdual {

FiniteAbelianGroup FiniteAbelianGroup::from_smith(const IntVector& diagonal, std::size_t generators) {
  FiniteAbelianGroup g;
  for (auto d : diagonal)
    if (d != 1) g.invariant_factors.push_back(d);
  for (std::size_t i = diagonal.size(); i < generators; ++i) g.invariant_factors.push_back(0);
  // torsion first (divisibility order), free factors last
  std::stable_partition(g.invariant_factors.begin(), g.invariant_factors.end(),
                        [](std::int64_t d) { return d != 0; });
  return g;
}

std::int64_t FiniteAbelianGroup::torsion_order() const {
  std::int64_t n = 1;
  for (auto d : invariant_factors)
    if (d != 0) n *= d;
  return n;
}

int FiniteAbelianGroup::free_rank() const {
  return static_cast<int>(std::count(invariant_factors.begin(), invariant_factors.end(), 0));
}

std::string FiniteAbelianGroup::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::string s;
  for (auto d : invariant_factors) {
    if (!s.empty()) s += " x ";
    s += d == 0 ? std::string("Z") : "Z/" + std::to_string(d);
  }
  return s;
}

ScalarVector cartan_symmetrizer(const IntMatrix& a) {
  const std::size_t r = a.size();
  ScalarVector q(r, Scalar(0));
  if (r == 0) return q;
  q[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || a[i][j] == 0 || a[j][i] == 0) continue;
      const Scalar want = q[i] * Scalar(static_cast<long>(a[i][j])) / static_cast<long>(a[j][i]);
      if (q[j] == 0) {
        q[j] = want;
        queue.push_back(j);
      } else if (q[j] != want) {
        throw InvalidInput("Cartan matrix is not symmetrizable");
      }
    }
  }
  for (const auto& x : q)
    if (x == 0) throw InvalidInput("Dynkin diagram is disconnected");
  return q;
}

void validate_cartan(const IntMatrix& a) {
  const std::size_t r = a.size();
  if (r == 0) throw InvalidInput("empty Cartan matrix (pure tori are not supported)");
  for (const auto& row : a)
    if (row.size() != r) throw InvalidInput("Cartan matrix is not square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && a[i][j] != 2) throw InvalidInput("Cartan diagonal entry is not 2");
      if (i != j && a[i][j] > 0) throw InvalidInput("positive off-diagonal Cartan entry");
      if (i != j && ((a[i][j] == 0) != (a[j][i] == 0)))
        throw InvalidInput("Cartan zero pattern is not symmetric");
    }

  const ScalarVector q = cartan_symmetrizer(a);

  ScalarMatrix s(r, ScalarVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s[i][j] = q[i] * static_cast<long>(a[i][j]);
  for (std::size_t k = 1; k <= r; ++k) {
    ScalarMatrix minor(k, ScalarVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = s[i][j];
    if (determinant(minor) <= 0) throw InvalidInput("Cartan matrix is not of finite type");
  }
}

namespace {

IntMatrix central_kernel(const IntMatrix& functionals, std::size_t n) {
  // integer vectors y with <f, y> = 0 for every row f
  const SmithForm snf = smith_normal_form(functionals);
  std::size_t nonzero = 0;
  for (auto d : snf.invariant_factors())
    if (d != 0) ++nonzero;
  IntMatrix rows;
  for (std::size_t j = nonzero; j < n; ++j) {
    IntVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = snf.right[k][j];
    rows.push_back(v);
  }
  return lattice_basis(rows);
}

IntVector combine(const IntVector& coeffs, const IntMatrix& rows, std::size_t n) {
  IntVector v(n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) v[k] += coeffs[i] * rows[i][k];
  return v;
}

}  // namespace

RootDatum RootDatum::from_simple(std::string name, const IntMatrix& cartan,
                                 const IntMatrix& simple_roots, const IntMatrix& simple_coroots) {
  validate_cartan(cartan);
  const std::size_t r = cartan.size();
  if (simple_roots.size() != r || simple_coroots.size() != r)
    throw InvalidInput("need one simple root and one simple coroot per Cartan row");
  const std::size_t n = simple_roots[0].size();
  for (std::size_t i = 0; i < r; ++i)
    if (simple_roots[i].size() != n || simple_coroots[i].size() != n)
      throw InvalidInput("simple (co)roots have inconsistent lattice rank");
  if (n < r) throw InvalidInput("lattice rank smaller than semisimple rank");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (dot(simple_roots[i], simple_coroots[j]) != cartan[j][i])
        throw InvalidInput("simple roots and coroots do not realize the Cartan matrix");

  RootDatum d;
  d.name_ = std::move(name);
  d.dim_ = static_cast<int>(n);
  d.cartan_ = cartan;
  d.simple_roots_ = simple_roots;
  d.simple_coroots_ = simple_coroots;
  d.build();
  return d;
}

void RootDatum::build() {
  const std::size_t r = cartan_.size();
  const std::size_t n = static_cast<std::size_t>(dim_);

  // coweight coordinates are the pairings with the simple roots; central
  // coordinates are a canonical basis of characters killing every coroot
  const IntMatrix central = central_kernel(simple_coroots_, n);
  if (central.size() != n - r) throw InvalidInput("simple coroots are linearly dependent");
  cochar_basis_.assign(n, IntVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i) cochar_basis_[k][i] = simple_roots_[i][k];
    for (std::size_t m = 0; m < central.size(); ++m) cochar_basis_[k][r + m] = central[m][k];
  }
  if (determinant(to_scalar(cochar_basis_)) == 0)
    throw InvalidInput("simple roots are linearly dependent");

  // close (root, coroot) pairs under the simple reflections
  std::map<IntVector, IntVector> found;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector c = queue.front();
    queue.pop_front();
    const IntVector dc = found.at(c);
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t a = 0, b = 0;
      for (std::size_t j = 0; j < r; ++j) {
        a += c[j] * cartan_[i][j];
        b += dc[j] * cartan_[j][i];
      }
      IntVector c2 = c, d2 = dc;
      c2[i] -= a;
      d2[i] -= b;
      if (found.emplace(c2, d2).second) queue.push_back(c2);
    }
  }

  std::vector<Root> pos;
  for (const auto& [c, dc] : found) {
    std::int64_t h = 0;
    for (auto x : c) h += x;
    if (h <= 0) continue;
    Root root;
    root.coefficients = c;
    root.coroot_coefficients = dc;
    root.height = static_cast<int>(h);
    pos.push_back(std::move(root));
  }
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.coefficients > y.coefficients;
  });
  if (2 * pos.size() != found.size()) throw Error("root enumeration is not symmetric");

  roots_.clear();
  for (const auto& p : pos) roots_.push_back(p);
  for (const auto& p : pos) {
    Root neg;
    for (auto x : p.coefficients) neg.coefficients.push_back(-x);
    for (auto x : p.coroot_coefficients) neg.coroot_coefficients.push_back(-x);
    neg.height = -p.height;
    roots_.push_back(std::move(neg));
  }
  for (auto& root : roots_) {
    root.character = combine(root.coefficients, simple_roots_, n);
    root.cocharacter = combine(root.coroot_coefficients, simple_coroots_, n);
  }
  highest_ = pos.size() - 1;
}

RootDatum RootDatum::from_basis(std::string name, const IntMatrix& cartan, const IntMatrix& basis,
                                int central_rank) {
  validate_cartan(cartan);
  if (central_rank < 0) throw InvalidInput("negative central rank");
  const std::size_t r = cartan.size();
  const std::size_t n = r + static_cast<std::size_t>(central_rank);
  if (basis.size() != n) throw InvalidInput("lattice basis must have rank + central_rank rows");
  for (const auto& row : basis)
    if (row.size() != n) throw InvalidInput("lattice basis rows have the wrong length");
  if (determinant(to_scalar(basis)) == 0) throw InvalidInput("lattice basis is singular");

  IntMatrix roots(r, IntVector(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) roots[i][k] = basis[k][i];

  const ScalarMatrix b = to_scalar(basis);
  IntMatrix coroots(r, IntVector(n));
  for (std::size_t j = 0; j < r; ++j) {
    ScalarVector target(n, Scalar(0));
    for (std::size_t i = 0; i < r; ++i) target[i] = static_cast<long>(cartan[j][i]);
    const auto x = solve_row(b, target);
    for (std::size_t k = 0; k < n; ++k) {
      if ((*x)[k].get_den() != 1)
        throw InvalidInput("lattice does not contain the coroot lattice");
      coroots[j][k] = (*x)[k].get_num().get_si();
    }
  }
  return from_simple(std::move(name), cartan, roots, coroots);
}

RootDatum RootDatum::simply_connected(std::string name, const IntMatrix& cartan, int central_rank) {
  validate_cartan(cartan);
  const std::size_t r = cartan.size();
  const std::size_t n = r + static_cast<std::size_t>(std::max(central_rank, 0));
  IntMatrix basis = identity_int(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) basis[i][j] = cartan[i][j];
  return from_basis(std::move(name), cartan, basis, central_rank);
}

RootDatum RootDatum::adjoint(std::string name, const IntMatrix& cartan, int central_rank) {
  validate_cartan(cartan);
  const std::size_t n = cartan.size() + static_cast<std::size_t>(std::max(central_rank, 0));
  return from_basis(std::move(name), cartan, identity_int(n), central_rank);
}

RootDatum RootDatum::from_coweights(std::string name, const IntMatrix& cartan,
                                    const IntMatrix& extra_coweights) {
  validate_cartan(cartan);
  IntMatrix gens = cartan;
  for (const auto& w : extra_coweights) {
    if (w.size() != cartan.size()) throw InvalidInput("coweight generator has the wrong length");
    gens.push_back(w);
  }
  return from_basis(std::move(name), cartan, lattice_basis(gens), 0);
}

int RootDatum::find_root(const IntVector& coefficients) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].coefficients == coefficients) return static_cast<int>(i);
  return -1;
}

int RootDatum::find_coroot(const IntVector& cocharacter) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].cocharacter == cocharacter) return static_cast<int>(i);
  return -1;
}

int RootDatum::negative_of(int index) const {
  const int half = static_cast<int>(num_positive());
  return index < half ? index + half : index - half;
}

bool RootDatum::operator==(const RootDatum& o) const {
  return cartan_ == o.cartan_ && simple_roots_ == o.simple_roots_ &&
         simple_coroots_ == o.simple_coroots_;
}

const std::vector<Root>& enumerate_roots(const RootDatum& d) { return d.roots(); }

std::int64_t killing_form(const RootDatum& d, const IntVector& x, const IntVector& y) {
  if (x.size() != static_cast<std::size_t>(d.dim()) || y.size() != x.size())
    throw InvalidInput("killing_form: vector length does not match the lattice rank");
  std::int64_t s = 0;
  for (const auto& a : d.roots()) s += dot(a.character, x) * dot(a.character, y);
  return s;
}

int length_ratio(const RootDatum& d) {
  std::int64_t lo = 0, hi = 0;
  for (const auto& c : d.simple_coroots()) {
    const std::int64_t k = killing_form(d, c, c);
    lo = lo == 0 ? k : std::min(lo, k);
    hi = std::max(hi, k);
  }
  return static_cast<int>(hi / lo);
}

IntVector coroot_lengths(const RootDatum& d) {
  const std::int64_t short_len = killing_form(d, d.theta(), d.theta());
  IntVector out;
  for (const auto& c : d.simple_coroots()) {
    const std::int64_t k = killing_form(d, c, c);
    if (k % short_len != 0) throw Error("coroot length is not a multiple of the short length");
    out.push_back(k / short_len);
  }
  return out;
}

FiniteAbelianGroup component_group(const RootDatum& d) {
  const SmithForm snf = smith_normal_form(d.simple_coroots());
  return FiniteAbelianGroup::from_smith(snf.invariant_factors(), static_cast<std::size_t>(d.dim()));
}

FiniteAbelianGroup center_group(const RootDatum& d) {
  const SmithForm snf = smith_normal_form(d.simple_roots());
  return FiniteAbelianGroup::from_smith(snf.invariant_factors(), static_cast<std::size_t>(d.dim()));
}

std::int64_t two_rho_degree(const RootDatum& d, const IntVector& coroot) {
  if (d.find_coroot(coroot) < 0) throw InvalidInput("two_rho_degree: vector is not a coroot");
  IntVector rho2(static_cast<std::size_t>(d.dim()), 0);
  for (std::size_t i = 0; i < d.num_positive(); ++i)
    for (std::size_t k = 0; k < rho2.size(); ++k) rho2[k] += d.roots()[i].character[k];
  return dot(rho2, coroot);
}

IntVector exponents(const RootDatum& d) {
  std::map<int, std::int64_t> by_height;
  int top = 0;
  for (std::size_t i = 0; i < d.num_positive(); ++i) {
    ++by_height[d.roots()[i].height];
    top = std::max(top, d.roots()[i].height);
  }
  IntVector out;
  for (int k = 1; k <= top; ++k) {
    const std::int64_t here = by_height[k];
    const std::int64_t next = k + 1 <= top ? by_height[k + 1] : 0;
    for (std::int64_t m = 0; m < here - next; ++m) out.push_back(k);
  }
  return out;
}

RootDatum dual_datum(const RootDatum& d) {
  std::string name = d.name();
  const std::string prefix = "dual(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')')
    name = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  else
    name = prefix + name + ")";
  return RootDatum::from_simple(std::move(name), transpose(d.cartan()), d.simple_coroots(),
                                d.simple_roots());
}

IntMatrix cartan_of_type(char type, int n) {
  auto chain = [](int m) {
    IntMatrix a(static_cast<std::size_t>(m), IntVector(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i) {
      a[i][i] = 2;
      if (i + 1 < m) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  auto link = [](IntMatrix& a, int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B':
    case 'C': {
      if (n < 2) break;
      IntMatrix a = chain(n);
      a[n - 1][n - 2] = -2;  // last simple root short in type B
      return type == 'B' ? a : transpose(a);
    }
    case 'D': {
      if (n < 4) break;
      IntMatrix a = chain(n - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(IntVector(static_cast<std::size_t>(n), 0));
      a[n - 1][n - 1] = 2;
      link(a, n - 3, n - 1);
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMatrix a(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      link(a, 0, 2);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      link(a, 1, 3);
      return a;
    }
    case 'F': {
      if (n != 4) break;
      IntMatrix a = chain(4);
      a[2][1] = -2;
      return a;
    }
    case 'G':
      if (n != 2) break;
      return {{2, -1}, {-3, 2}};
    default:
      break;
  }
  throw InvalidInput(std::string("unknown Cartan type ") + type + std::to_string(n));
}

namespace {

IntVector unit(int n, int i) {
  IntVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

struct PresetEntry {
  const char* name;
  char type;
  int rank;
  // 's' simply connected, 'a' adjoint, 'w' coroot lattice + listed coweights
  char form;
  std::vector<int> coweights;
};

const std::vector<PresetEntry>& preset_table() {
  static const std::vector<PresetEntry> table = {
      {"SL2", 'A', 1, 's', {}},      {"PGL2", 'A', 1, 'a', {}},     {"SL3", 'A', 2, 's', {}},
      {"PGL3", 'A', 2, 'a', {}},     {"SL4", 'A', 3, 's', {}},      {"PGL4", 'A', 3, 'a', {}},
      {"SL4/mu2", 'A', 3, 'w', {1}}, {"SL5", 'A', 4, 's', {}},      {"PGL5", 'A', 4, 'a', {}},
      {"SL6", 'A', 5, 's', {}},      {"PGL6", 'A', 5, 'a', {}},     {"SL6/mu2", 'A', 5, 'w', {2}},
      {"SL6/mu3", 'A', 5, 'w', {1}}, {"Spin5", 'B', 2, 's', {}},    {"SO5", 'B', 2, 'a', {}},
      {"Sp4", 'C', 2, 's', {}},      {"PSp4", 'C', 2, 'a', {}},     {"Spin7", 'B', 3, 's', {}},
      {"SO7", 'B', 3, 'a', {}},      {"Sp6", 'C', 3, 's', {}},      {"PSp6", 'C', 3, 'a', {}},
      {"G2", 'G', 2, 's', {}},       {"F4", 'F', 4, 's', {}},       {"Spin8", 'D', 4, 's', {}},
      {"SO8", 'D', 4, 'w', {0}},     {"SO8+", 'D', 4, 'w', {3}},    {"SO8-", 'D', 4, 'w', {2}},
      {"PSO8", 'D', 4, 'a', {}},     {"Spin10", 'D', 5, 's', {}},   {"SO10", 'D', 5, 'w', {0}},
      {"PSO10", 'D', 5, 'a', {}},    {"Spin12", 'D', 6, 's', {}},   {"SO12", 'D', 6, 'w', {0}},
      {"SO12+", 'D', 6, 'w', {5}},   {"SO12-", 'D', 6, 'w', {4}},   {"PSO12", 'D', 6, 'a', {}},
      {"E6", 'E', 6, 's', {}},       {"PE6", 'E', 6, 'a', {}},      {"E7", 'E', 7, 's', {}},
      {"PE7", 'E', 7, 'a', {}},
  };
  return table;
}

RootDatum build_preset(const std::string& name, char type, int rank, char form,
                       const std::vector<int>& coweights) {
  const IntMatrix a = cartan_of_type(type, rank);
  switch (form) {
    case 's': return RootDatum::simply_connected(name, a);
    case 'a': return RootDatum::adjoint(name, a);
    default: {
      IntMatrix extra;
      for (int i : coweights) extra.push_back(unit(rank, i));
      return RootDatum::from_coweights(name, a, extra);
    }
  }
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : preset_table()) names.emplace_back(p.name);
  names.insert(names.begin() + 2, "GL2");
  return names;
}

RootDatum preset(const std::string& name) {
  for (const auto& p : preset_table())
    if (name == p.name) return build_preset(p.name, p.type, p.rank, p.form, p.coweights);
  if (name == "GL2")
    return RootDatum::from_basis("GL2", {{2}}, {{1, 1}, {-1, 1}}, 1);

  static const std::regex pattern("([ABCDEFG])([0-9]+)(-(sc|ad))?");
  std::smatch m;
  if (std::regex_match(name, m, pattern)) {
    const char type = m[1].str()[0];
    const int rank = std::stoi(m[2].str());
    const bool adjoint = m[4].matched && m[4].str() == "ad";
    return build_preset(name, type, rank, adjoint ? 'a' : 's', {});
  }
  throw InvalidInput("unknown preset: " + name);
}

RootDatum load_datum(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("root datum document is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InvalidInput("root datum document must be an object");
    if (doc.contains("preset")) return preset(doc.at("preset").get<std::string>());
    const std::string name = doc.value("name", std::string("custom"));
    const int central = doc.value("central_rank", 0);
    if (!doc.contains("cartan")) throw InvalidInput("root datum document lacks 'cartan'");
    const IntMatrix cartan = doc.at("cartan").get<IntMatrix>();
    const json lattice = doc.value("lattice", json("simply_connected"));
    if (lattice.is_string()) {
      const std::string tag = lattice.get<std::string>();
      if (tag == "simply_connected" || tag == "sc")
        return RootDatum::simply_connected(name, cartan, central);
      if (tag == "adjoint" || tag == "ad") return RootDatum::adjoint(name, cartan, central);
      throw InvalidInput("unknown lattice tag: " + tag);
    }
    if (lattice.is_object() && lattice.contains("basis"))
      return RootDatum::from_basis(name, cartan, lattice.at("basis").get<IntMatrix>(), central);
    if (lattice.is_object() && lattice.contains("coweights")) {
      if (central != 0) throw InvalidInput("'coweights' lattices cannot carry a central part");
      return RootDatum::from_coweights(name, cartan, lattice.at("coweights").get<IntMatrix>());
    }
    throw InvalidInput("lattice must be a tag or an object with 'basis' or 'coweights'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed root datum document: ") + e.what());
  }
}

std::string datum_to_json(const RootDatum& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name();
  j["cartan"] = d.cartan();
  j["lattice"] = {{"basis", d.cochar_basis()}};
  j["central_rank"] = d.central_rank();
  return j.dump();
}

}  // namespace loopdual
