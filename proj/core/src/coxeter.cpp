#include "pipelat/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace pipelat {

std::size_t RootVecHash::operator()(const RootVec& v) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const FieldElement& x : v) h = (h ^ x.hash()) * 1099511628211ull;
  return h;
}

CoxWord parse_word(std::string_view text) {
  CoxWord w;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok.size() > 3) throw InvalidInput("malformed word: " + std::string(text));
    w.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) tok += c;
    else if (c == ',' || c == ' ') flush();
    else throw InvalidInput("malformed word: " + std::string(text));
  }
  flush();
  for (int s : w)
    if (s < 1) throw InvalidInput("generator indices start at 1");
  return w;
}

std::string to_string(const CoxWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

namespace {

struct TypeSpec {
  std::string tag;
  int rank = 0;
  std::vector<std::vector<int>> m;
  bool large = false;
};

TypeSpec parse_type(std::string_view raw) {
  std::string t;
  for (char c : raw)
    if (c != '_' && c != ' ') t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto bad = [&] { return InvalidInput("unsupported type: " + std::string(raw)); };
  if (t.empty()) throw bad();
  TypeSpec spec;
  auto chain = [&](int n) {
    spec.rank = n;
    spec.m.assign(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) spec.m[i][i] = 1;
  };
  auto edge = [&](int s, int t2, int v) { spec.m[s - 1][t2 - 1] = spec.m[t2 - 1][s - 1] = v; };
  if (t.rfind("I2(", 0) == 0 && t.back() == ')') {
    const std::string num = t.substr(3, t.size() - 4);
    if (num.empty() || num.size() > 2 || !std::all_of(num.begin(), num.end(), ::isdigit)) throw bad();
    const int m = std::stoi(num);
    if (m < 3 || m > 6) throw bad();
    chain(2);
    edge(1, 2, m);
    spec.tag = "I2(" + num + ")";
    return spec;
  }
  const char family = t[0];
  const std::string num = t.substr(1);
  if (num.empty() || num.size() > 2 || !std::all_of(num.begin(), num.end(), ::isdigit)) throw bad();
  const int n = std::stoi(num);
  spec.tag = std::string(1, family) + num;
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      chain(n);
      for (int i = 1; i < n; ++i) edge(i, i + 1, 3);
      break;
    case 'B':
      if (n < 2) throw bad();
      chain(n);
      for (int i = 1; i < n; ++i) edge(i, i + 1, i == n - 1 ? 4 : 3);
      break;
    case 'D':
      if (n < 4) throw bad();
      chain(n);
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, 3);
      edge(n - 2, n, 3);
      break;
    case 'H':
      if (n != 3 && n != 4) throw bad();
      chain(n);
      edge(1, 2, 5);
      for (int i = 2; i < n; ++i) edge(i, i + 1, 3);
      spec.large = n == 4;
      break;
    case 'F':
      if (n != 4) throw bad();
      chain(4);
      edge(1, 2, 3);
      edge(2, 3, 4);
      edge(3, 4, 3);
      spec.large = true;
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      chain(n);
      edge(1, 3, 3);
      edge(2, 4, 3);
      for (int i = 3; i < n; ++i) edge(i, i + 1, 3);
      spec.large = true;
      break;
    default:
      throw bad();
  }
  return spec;
}

// Entries (a_st, a_ts) with a_st * a_ts = 4 cos^2(pi/m).
std::pair<FieldElement, FieldElement> cartan_pair(int m) {
  switch (m) {
    case 2: return {0, 0};
    case 3: return {-1, -1};
    case 4: return {-1, -2};
    case 5: return {-FieldElement::golden(), -FieldElement::golden()};
    case 6: return {-1, -3};
    default: throw InvalidInput("unsupported Coxeter matrix entry " + std::to_string(m));
  }
}

int vec_sign(const RootVec& v) {
  for (const FieldElement& x : v)
    if (x.sign() != 0) return x.sign();
  return 0;
}

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(std::string_view tag, bool allow_large) {
  TypeSpec spec = parse_type(tag);
  if (spec.large && !allow_large)
    throw InvalidInput("type " + spec.tag + " requires the allow-large flag");
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  sys->type_ = spec.tag;
  sys->rank_ = spec.rank;
  sys->m_ = spec.m;
  const int n = spec.rank;
  sys->cartan_.assign(n, std::vector<FieldElement>(n, 0));
  for (int s = 0; s < n; ++s) {
    sys->cartan_[s][s] = 2;
    for (int t = s + 1; t < n; ++t) {
      auto [st, ts] = cartan_pair(spec.m[s][t]);
      sys->cartan_[s][t] = st;
      sys->cartan_[t][s] = ts;
    }
  }
  // Orbit of the simple roots under the simple reflections.
  std::vector<RootVec> all;
  std::unordered_map<RootVec, int, RootVecHash> seen;
  std::deque<RootVec> queue;
  for (int s = 0; s < n; ++s) {
    RootVec a(n, 0);
    a[s] = 1;
    seen.emplace(a, 0);
    all.push_back(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVec v = std::move(queue.front());
    queue.pop_front();
    for (int s = 1; s <= n; ++s) {
      RootVec w = sys->reflect(s, v);
      if (seen.emplace(w, 0).second) {
        if (all.size() > 10000) throw Error("root system is not finite");
        all.push_back(w);
        queue.push_back(w);
      }
    }
  }
  for (const RootVec& v : all) {
    bool pos = true, neg = true;
    for (const FieldElement& x : v) {
      pos = pos && x.sign() >= 0;
      neg = neg && x.sign() <= 0;
    }
    if (!pos && !neg) throw Error("root with mixed signs");
    if (pos) sys->positive_.push_back(v);
  }
  auto height = [](const RootVec& v) {
    FieldElement h = 0;
    for (const FieldElement& x : v) h += x;
    return h;
  };
  std::sort(sys->positive_.begin(), sys->positive_.end(), [&](const RootVec& x, const RootVec& y) {
    FieldElement hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return x[i] > y[i];
    return false;
  });
  if (sys->positive_.size() * 2 != all.size()) throw Error("root system is not symmetric");
  sys->roots_ = sys->positive_;
  for (const RootVec& v : sys->positive_) {
    RootVec w = v;
    for (FieldElement& x : w) x = -x;
    sys->roots_.push_back(w);
  }
  for (std::size_t i = 0; i < sys->roots_.size(); ++i) sys->index_.emplace(sys->roots_[i], static_cast<int>(i));
  return sys;
}

int CoxeterSystem::root_id(const RootVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

RootVec CoxeterSystem::reflect(int s, const RootVec& v) const {
  // s(v) = v - (sum_t a_st v_t) alpha_s
  FieldElement c = 0;
  for (int t = 0; t < rank_; ++t)
    if (!v[t].is_zero()) c += cartan_[s - 1][t] * v[t];
  RootVec w = v;
  w[s - 1] -= c;
  return w;
}

std::string CoxeterSystem::root_to_string(int id) const {
  const RootVec& v = roots_[id];
  std::string out;
  for (int t = 0; t < rank_; ++t) {
    if (v[t].is_zero()) continue;
    std::string coef = v[t].to_string();
    std::string term = "a" + std::to_string(t + 1);
    if (coef == "1") coef = "";
    else if (coef == "-1") coef = "-";
    else if (!v[t].is_rational() || v[t].d() != 1) coef = "(" + coef + ")";
    std::string piece = coef + term;
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

GroupElement::GroupElement(std::shared_ptr<const CoxeterSystem> sys) : sys_(std::move(sys)) {
  const int n = sys_->rank();
  mat_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) mat_[static_cast<std::size_t>(i * n + i)] = 1;
}

GroupElement GroupElement::from_word(std::shared_ptr<const CoxeterSystem> sys, const CoxWord& w) {
  GroupElement g(sys);
  for (int s : w) {
    if (s < 1 || s > sys->rank()) throw InvalidInput("generator index out of range");
    g = g.right_simple(s);
  }
  return g;
}

RootVec GroupElement::apply(const RootVec& v) const {
  const int n = rank();
  RootVec out(n, 0);
  for (int col = 0; col < n; ++col) {
    if (v[col].is_zero()) continue;
    for (int row = 0; row < n; ++row)
      if (!entry(row, col).is_zero()) out[row] += entry(row, col) * v[col];
  }
  return out;
}

void GroupElement::same_system(const GroupElement& o) const {
  if (sys_ != o.sys_) throw InvalidInput("elements of different Coxeter systems");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  same_system(o);
  const int n = rank();
  GroupElement out(sys_);
  for (int col = 0; col < n; ++col) {
    RootVec c(n);
    for (int row = 0; row < n; ++row) c[row] = o.entry(row, col);
    RootVec img = apply(c);
    for (int row = 0; row < n; ++row) out.mat_[static_cast<std::size_t>(col * n + row)] = img[row];
  }
  return out;
}

GroupElement GroupElement::right_simple(int s) const {
  const int n = rank();
  GroupElement out = *this;
  for (int t = 0; t < n; ++t) {
    const FieldElement& a = sys_->cartan(s, t + 1);
    if (t == s - 1) {
      for (int row = 0; row < n; ++row)
        out.mat_[static_cast<std::size_t>(t * n + row)] = -entry(row, t);
    } else if (!a.is_zero()) {
      for (int row = 0; row < n; ++row)
        out.mat_[static_cast<std::size_t>(t * n + row)] = entry(row, t) - a * entry(row, s - 1);
    }
  }
  return out;
}

GroupElement GroupElement::left_simple(int s) const {
  const int n = rank();
  GroupElement out = *this;
  for (int col = 0; col < n; ++col) {
    RootVec c(n);
    for (int row = 0; row < n; ++row) c[row] = entry(row, col);
    RootVec img = sys_->reflect(s, c);
    for (int row = 0; row < n; ++row) out.mat_[static_cast<std::size_t>(col * n + row)] = img[row];
  }
  return out;
}

bool GroupElement::has_right_descent(int s) const {
  for (int row = 0; row < rank(); ++row)
    if (int sg = entry(row, s - 1).sign()) return sg < 0;
  return false;
}

GroupElement GroupElement::inverse() const {
  // Peel right descents to get a reduced word, then multiply it reversed.
  CoxWord word;
  GroupElement u = *this;
  for (bool again = true; again;) {
    again = false;
    for (int s = 1; s <= rank(); ++s)
      if (u.has_right_descent(s)) {
        word.push_back(s);
        u = u.right_simple(s);
        again = true;
        break;
      }
  }
  return from_word(sys_, word);
}

int GroupElement::length() const { return static_cast<int>(inv_set().size()); }

std::vector<int> GroupElement::inv_set() const {
  const GroupElement winv = inverse();
  std::vector<int> out;
  for (int id = 0; id < sys_->positive_count(); ++id)
    if (vec_sign(winv.apply(sys_->root(id))) < 0) out.push_back(id);
  return out;
}

CoxWord GroupElement::reduced_word() const {
  CoxWord word;
  GroupElement u = inverse();
  for (bool again = true; again;) {
    again = false;
    for (int s = 1; s <= rank(); ++s)
      if (u.has_right_descent(s)) {
        word.push_back(s);
        u = u.right_simple(s);
        again = true;
        break;
      }
  }
  return word;
}

std::size_t GroupElement::hash() const {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (const FieldElement& x : mat_) h = (h ^ x.hash()) * 1099511628211ull;
  return h;
}

GroupElement mul(const GroupElement& u, const GroupElement& v) { return u * v; }
GroupElement inverse(const GroupElement& w) { return w.inverse(); }
int length(const GroupElement& w) { return w.length(); }
std::vector<int> inv_set(const GroupElement& w) { return w.inv_set(); }

CoxeterGroup::CoxeterGroup(std::shared_ptr<const CoxeterSystem> sys, std::size_t cap) : sys_(std::move(sys)) {
  const int n = sys_->rank();
  const int nroots = sys_->root_count();
  if (sys_->positive_count() > 64) throw CapExceeded("positive roots for group enumeration", 64);
  std::vector<ElemId> parent{0};
  std::vector<int> parent_s{0};
  elements_.emplace_back(sys_);
  lookup_[elements_[0].hash()].push_back(0);
  length_.push_back(0);
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    for (int s = 1; s <= n; ++s) {
      GroupElement g = elements_[w].right_simple(s);
      ElemId found = find(g);
      if (found < 0) {
        if (elements_.size() >= cap) throw CapExceeded("Coxeter group enumeration", cap);
        found = static_cast<ElemId>(elements_.size());
        lookup_[g.hash()].push_back(found);
        elements_.push_back(std::move(g));
        parent.push_back(static_cast<ElemId>(w));
        parent_s.push_back(s);
        length_.push_back(length_[w] + 1);
      }
      right_.push_back(found);
    }
  }
  const int size = static_cast<int>(elements_.size());
  // Simple reflections acting on root ids.
  std::vector<int> sref(static_cast<std::size_t>(n) * nroots);
  for (int s = 1; s <= n; ++s)
    for (int r = 0; r < nroots; ++r) {
      int id = sys_->root_id(sys_->reflect(s, sys_->root(r)));
      if (id < 0) throw Error("reflection of a root is not a root");
      sref[static_cast<std::size_t>((s - 1) * nroots + r)] = id;
    }
  act_.assign(static_cast<std::size_t>(size) * nroots, 0);
  for (int r = 0; r < nroots; ++r) act_[r] = r;
  for (ElemId w = 1; w < size; ++w) {
    const ElemId p = parent[w];
    const int s = parent_s[w];
    for (int r = 0; r < nroots; ++r)
      act_[static_cast<std::size_t>(w) * nroots + r] =
          act_[static_cast<std::size_t>(p) * nroots + sref[static_cast<std::size_t>((s - 1) * nroots + r)]];
  }
  left_.assign(static_cast<std::size_t>(size) * n, 0);
  for (ElemId w = 0; w < size; ++w)
    for (int s = 1; s <= n; ++s) {
      const ElemId found = find(elements_[w].left_simple(s));
      if (found < 0) throw Error("group is not closed under left multiplication");
      left_[static_cast<std::size_t>(w) * n + s - 1] = found;
    }
  inverse_.assign(size, 0);
  for (ElemId w = 1; w < size; ++w) inverse_[w] = left_mul(parent_s[w], inverse_[parent[w]]);
  inv_.assign(size, 0);
  const int npos = sys_->positive_count();
  for (ElemId w = 0; w < size; ++w)
    for (int r = 0; r < npos; ++r)
      if (!sys_->is_positive(act(inverse_[w], r))) inv_[w] |= std::uint64_t{1} << r;
  longest_ = static_cast<ElemId>(std::max_element(length_.begin(), length_.end()) - length_.begin());
  reflection_.assign(nroots, -1);
  for (ElemId w = 0; w < size; ++w)
    for (int s = 1; s <= n; ++s) {
      const int beta = act(w, s - 1);
      if (reflection_[beta] >= 0) continue;
      const ElemId refl = mul(right_mul(w, s), inverse_[w]);
      reflection_[beta] = refl;
      reflection_[sys_->negate(beta)] = refl;
    }
}

ElemId CoxeterGroup::find(const GroupElement& g) const {
  auto it = lookup_.find(g.hash());
  if (it != lookup_.end())
    for (ElemId c : it->second)
      if (elements_[c] == g) return c;
  return -1;
}

ElemId CoxeterGroup::id_of(const GroupElement& g) const {
  if (g.system_ptr() != sys_) throw InvalidInput("element of a different Coxeter system");
  const ElemId id = find(g);
  if (id < 0) throw InvalidInput("element not found in the group");
  return id;
}

ElemId CoxeterGroup::from_word(const CoxWord& w) const {
  ElemId g = 0;
  for (int s : w) {
    if (s < 1 || s > rank()) throw InvalidInput("generator index out of range");
    g = right_mul(g, s);
  }
  return g;
}

ElemId CoxeterGroup::mul(ElemId u, ElemId v) const {
  for (int s : reduced_word(v)) u = right_mul(u, s);
  return u;
}

CoxWord CoxeterGroup::reduced_word(ElemId w) const {
  CoxWord word;
  while (w != 0) {
    for (int s = 1; s <= rank(); ++s) {
      ElemId v = left_mul(s, w);
      if (length_[v] < length_[w]) {
        word.push_back(s);
        w = v;
        break;
      }
    }
  }
  return word;
}

std::string CoxeterGroup::word_string(ElemId w) const { return to_string(reduced_word(w)); }

FinitePoset CoxeterGroup::weak_order() const {
  std::vector<Cover> covers;
  for (ElemId w = 0; w < size(); ++w)
    for (int s = 1; s <= rank(); ++s) {
      ElemId v = right_mul(w, s);
      if (length_[v] == length_[w] + 1) covers.emplace_back(w, v);
    }
  return FinitePoset(static_cast<std::size_t>(size()), std::move(covers));
}

std::vector<ElemId> CoxeterGroup::interval_below(ElemId omega) const {
  std::vector<ElemId> out;
  for (ElemId w = 0; w < size(); ++w)
    if (weak_leq(w, omega)) out.push_back(w);
  return out;
}

ElemId CoxeterGroup::demazure_product(const CoxWord& q) const {
  ElemId d = 0;
  for (int s : q) {
    ElemId v = right_mul(d, s);
    if (length_[v] > length_[d]) d = v;
  }
  return d;
}

bool CoxeterGroup::contains_reduced_word(const CoxWord& q, ElemId x) const {
  ElemId v = x;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    ElemId u = right_mul(v, *it);
    if (length_[u] < length_[v]) v = u;
  }
  return v == 0;
}

bool CoxeterGroup::contains_reduced_word_brute(const CoxWord& q, ElemId x) const {
  if (q.size() > 24) throw CapExceeded("brute force subword search length", 24);
  const std::uint32_t total = std::uint32_t{1} << q.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    ElemId g = 0;
    int len = 0;
    bool reduced = true;
    for (std::size_t i = 0; i < q.size() && reduced; ++i) {
      if (!((mask >> i) & 1u)) continue;
      ElemId h = right_mul(g, q[i]);
      reduced = length_[h] == length_[g] + 1;
      g = h;
      ++len;
    }
    if (reduced && g == x) return true;
  }
  return false;
}

bool is_alternating(const CoxeterSystem& sys, const CoxWord& q) {
  for (int s = 1; s <= sys.rank(); ++s)
    for (int t = s + 1; t <= sys.rank(); ++t) {
      if (sys.m(s, t) < 3) continue;
      int last = 0;
      for (int x : q) {
        if (x != s && x != t) continue;
        if (x == last) return false;
        last = x;
      }
    }
  return true;
}

namespace {

void require_type_a(const CoxeterSystem& sys) {
  if (sys.type().empty() || sys.type()[0] != 'A') throw InvalidInput("type A system required");
}

}  // namespace

ElemId element_of_permutation(const CoxeterGroup& g, const Permutation& pi) {
  require_type_a(g.system());
  if (pi.size() != g.rank() + 1) throw InvalidInput("permutation size does not match the rank");
  CoxWord rev;
  Permutation p = pi;
  for (bool again = true; again;) {
    again = false;
    for (int k = 1; k < p.size(); ++k)
      if (p(k) > p(k + 1)) {
        rev.push_back(k);
        p = p.swap_positions(k);
        again = true;
        break;
      }
  }
  return g.from_word(CoxWord(rev.rbegin(), rev.rend()));
}

Permutation permutation_of(const CoxeterGroup& g, ElemId w) {
  require_type_a(g.system());
  Permutation p = Permutation::identity(g.rank() + 1);
  for (int s : g.reduced_word(w)) p = p.swap_positions(s);
  return p;
}

int type_a_root(const CoxeterSystem& sys, int i, int j) {
  require_type_a(sys);
  const int n = sys.rank() + 1;
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw InvalidInput("invalid root indices");
  RootVec v(sys.rank(), 0);
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int k = lo; k < hi; ++k) v[k - 1] = i < j ? 1 : -1;
  return sys.root_id(v);
}

}  // namespace pipelat
