#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gdet/cyclotomic.hpp"
#include "gdet/ints.hpp"

namespace gdet {

// Coordinate vector of an element of a product of cyclic groups.
using Element = std::vector<int>;

// Finite abelian group C_{n_1} x ... x C_{n_k}. Elements are enumerated in
// mixed-radix order with the FIRST coordinate varying fastest, so for
// orders (8,2) the element (r,s) has index r + 8s. Immutable.
class Group {
 public:
  explicit Group(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("Group: no factors");
    size_ = 1;
    exponent_ = 1;
    for (int n : orders_) {
      if (n < 1) throw std::invalid_argument("Group: orders must be positive");
      size_ *= static_cast<size_t>(n);
      exponent_ = std::lcm(exponent_, n);
    }
    if (size_ > (1u << 22))
      throw std::invalid_argument("Group: size beyond supported scale");
    strides_.resize(orders_.size());
    size_t s = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
      strides_[i] = s;
      s *= static_cast<size_t>(orders_[i]);
    }
    // Pairing table: chi_a(g) = zeta_N^pairing_[a][g], N the exponent.
    if (size_ <= 256) {
      pairing_.assign(size_, std::vector<int>(size_));
      for (size_t a = 0; a < size_; ++a) {
        Element chi = element(a);
        for (size_t g = 0; g < size_; ++g)
          pairing_[a][g] = pairing_exponent(chi, element(g));
      }
    }
  }

  size_t size() const { return size_; }
  int exponent() const { return exponent_; }
  const std::vector<int>& orders() const { return orders_; }
  size_t identity() const { return 0; }

  size_t index_of(const Element& g) const {
    if (g.size() != orders_.size())
      throw std::invalid_argument("Group: wrong coordinate count");
    size_t idx = 0;
    for (size_t i = 0; i < g.size(); ++i) {
      int c = g[i];
      if (c < 0 || c >= orders_[i])
        throw std::invalid_argument("Group: coordinate out of range");
      idx += strides_[i] * static_cast<size_t>(c);
    }
    return idx;
  }

  Element element(size_t idx) const {
    Element g(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
      g[i] = static_cast<int>(idx % static_cast<size_t>(orders_[i]));
      idx /= static_cast<size_t>(orders_[i]);
    }
    return g;
  }

  size_t op(size_t a, size_t b) const {
    size_t idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
      auto n = static_cast<size_t>(orders_[i]);
      size_t ca = (a / strides_[i]) % n;
      size_t cb = (b / strides_[i]) % n;
      idx += strides_[i] * ((ca + cb) % n);
    }
    return idx;
  }

  size_t inverse(size_t a) const {
    size_t idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
      auto n = static_cast<size_t>(orders_[i]);
      size_t ca = (a / strides_[i]) % n;
      idx += strides_[i] * ((n - ca) % n);
    }
    return idx;
  }

  size_t power(size_t a, long long k) const {
    size_t idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
      auto n = static_cast<long long>(orders_[i]);
      auto ca = static_cast<long long>((a / strides_[i]) % static_cast<size_t>(n));
      idx += strides_[i] * static_cast<size_t>(mod_floor(ca * k, n));
    }
    return idx;
  }

  int element_order(size_t a) const {
    size_t cur = a;
    int k = 1;
    while (cur != identity()) {
      cur = op(cur, a);
      ++k;
    }
    return k;
  }

  // Exponent e with chi_a(g) = zeta_N^e, where the character with index a
  // has exponent vector element(a).
  int chi_exponent(size_t a, size_t g) const {
    if (!pairing_.empty()) return pairing_[a][g];
    return pairing_exponent(element(a), element(g));
  }

  Cyclo chi_value(const CycloRingPtr& ring, size_t a, size_t g) const {
    return Cyclo::root_of_unity(ring, chi_exponent(a, g));
  }

 private:
  int pairing_exponent(const Element& chi, const Element& g) const {
    long long e = 0;
    for (size_t i = 0; i < orders_.size(); ++i)
      e += static_cast<long long>(chi[i]) * g[i] * (exponent_ / orders_[i]);
    return static_cast<int>(e % exponent_);
  }

  std::vector<int> orders_;
  std::vector<size_t> strides_;
  size_t size_ = 0;
  int exponent_ = 1;
  std::vector<std::vector<int>> pairing_;
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr make_group(std::vector<int> orders) {
  return std::make_shared<Group>(std::move(orders));
}

// Explicit element set closed under product and inverse.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<size_t> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    member_.assign(parent_->size(), false);
    for (size_t e : elements_) {
      if (e >= parent_->size())
        throw std::invalid_argument("Subgroup: element out of range");
      member_[e] = true;
    }
    validate();
  }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<size_t>& elements() const { return elements_; }
  size_t order() const { return elements_.size(); }
  bool contains(size_t e) const { return member_[e]; }
  size_t index_in_parent() const { return parent_->size() / order(); }

 private:
  void validate() const {
    if (elements_.empty() || !member_[parent_->identity()])
      throw std::invalid_argument("Subgroup: missing identity");
    for (size_t a : elements_) {
      if (!member_[parent_->inverse(a)])
        throw std::invalid_argument("Subgroup: not closed under inverse");
      for (size_t b : elements_)
        if (!member_[parent_->op(a, b)])
          throw std::invalid_argument("Subgroup: not closed under product");
    }
    if (parent_->size() % elements_.size() != 0)
      throw std::invalid_argument("Subgroup: order does not divide |G|");
  }

  GroupPtr parent_;
  std::vector<size_t> elements_;
  std::vector<bool> member_;
};

// Smallest subgroup containing the generators.
inline Subgroup subgroup_closure(const GroupPtr& g,
                                 const std::vector<size_t>& gens) {
  std::vector<bool> in(g->size(), false);
  std::vector<size_t> members{g->identity()};
  in[g->identity()] = true;
  std::vector<size_t> frontier = members;
  for (size_t e : gens) {
    if (e >= g->size()) throw std::invalid_argument("subgroup_closure: bad generator");
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
      frontier.push_back(e);
    }
  }
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t a : frontier)
      for (size_t i = 0; i < members.size(); ++i) {
        size_t p = g->op(a, members[i]);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return Subgroup(g, std::move(members));
}

inline Subgroup subgroup_closure(const GroupPtr& g,
                                 const std::vector<Element>& gens) {
  std::vector<size_t> idx;
  idx.reserve(gens.size());
  for (const Element& e : gens) idx.push_back(g->index_of(e));
  return subgroup_closure(g, idx);
}

// Coset decomposition G = union of tH with a chosen transversal T. The
// canonical transversal takes the representative with lexicographically
// smallest coordinate vector in each coset, so the identity represents its
// own coset; an explicit transversal can be supplied instead.
class Quotient {
 public:
  Quotient(GroupPtr parent, Subgroup h)
      : Quotient(std::move(parent), std::move(h), {}, true) {}

  Quotient(GroupPtr parent, Subgroup h, std::vector<size_t> transversal)
      : Quotient(std::move(parent), std::move(h), std::move(transversal),
                 false) {}

  const GroupPtr& parent() const { return parent_; }
  const Subgroup& subgroup() const { return h_; }
  const std::vector<size_t>& transversal() const { return transversal_; }
  size_t coset_count() const { return transversal_.size(); }
  size_t coset_of(size_t g) const { return coset_index_[g]; }

 private:
  Quotient(GroupPtr parent, Subgroup h, std::vector<size_t> transversal,
           bool canonical)
      : parent_(std::move(parent)), h_(std::move(h)) {
    if (h_.parent().get() != parent_.get() &&
        h_.parent()->orders() != parent_->orders())
      throw std::invalid_argument("Quotient: subgroup of a different group");
    const size_t n = parent_->size();
    coset_index_.assign(n, SIZE_MAX);
    // Sweep all elements; cosets keyed by their minimal element index.
    std::vector<size_t> coset_key(n, SIZE_MAX);
    std::vector<size_t> keys;
    for (size_t g = 0; g < n; ++g) {
      if (coset_key[g] != SIZE_MAX) continue;
      keys.push_back(g);
      for (size_t h : h_.elements()) coset_key[parent_->op(g, h)] = g;
    }
    if (canonical) {
      // Lexicographically smallest coordinate vector in each coset.
      transversal_.clear();
      for (size_t key : keys) {
        size_t best = key;
        Element best_vec = parent_->element(key);
        for (size_t h : h_.elements()) {
          size_t cand = parent_->op(key, h);
          Element v = parent_->element(cand);
          if (std::lexicographical_compare(v.begin(), v.end(), best_vec.begin(),
                                           best_vec.end())) {
            best = cand;
            best_vec = std::move(v);
          }
        }
        transversal_.push_back(best);
      }
      std::sort(transversal_.begin(), transversal_.end());
    } else {
      transversal_ = std::move(transversal);
      if (transversal_.size() != keys.size())
        throw std::invalid_argument("Quotient: transversal has wrong size");
    }
    std::vector<bool> seen(keys.size(), false);
    std::vector<size_t> key_to_pos(n, SIZE_MAX);
    for (size_t i = 0; i < keys.size(); ++i) key_to_pos[keys[i]] = i;
    for (size_t i = 0; i < transversal_.size(); ++i) {
      size_t rep = transversal_[i];
      if (rep >= n) throw std::invalid_argument("Quotient: bad representative");
      size_t pos = key_to_pos[coset_key[rep]];
      if (seen[pos])
        throw std::invalid_argument("Quotient: duplicate coset representative");
      seen[pos] = true;
    }
    for (size_t g = 0; g < n; ++g) {
      size_t key = coset_key[g];
      for (size_t i = 0; i < transversal_.size(); ++i)
        if (coset_key[transversal_[i]] == key) {
          coset_index_[g] = i;
          break;
        }
    }
  }

  GroupPtr parent_;
  Subgroup h_;
  std::vector<size_t> transversal_;
  std::vector<size_t> coset_index_;
};

inline Quotient quotient(GroupPtr g, Subgroup h) {
  return Quotient(std::move(g), std::move(h));
}

// A character of G, encoded by its exponent vector (same indexing scheme as
// group elements; the dual group of a product of cyclics is the same
// product, with exponent vectors adding componentwise).
struct Character {
  GroupPtr parent;
  size_t index = 0;

  Element exponents() const { return parent->element(index); }
  int exponent_at(size_t g) const { return parent->chi_exponent(index, g); }
  Cyclo value(const CycloRingPtr& ring, size_t g) const {
    return parent->chi_value(ring, index, g);
  }
  bool trivial_on(const Subgroup& h) const {
    for (size_t e : h.elements())
      if (parent->chi_exponent(index, e) != 0) return false;
    return true;
  }
};

// Splitting of the dual group along a subgroup H: the characters trivial on
// H, and a transversal X of their cosets. Restriction of X to H enumerates
// the dual of H without repeats.
class CharacterDecomposition {
 public:
  CharacterDecomposition(GroupPtr g, Subgroup h)
      : CharacterDecomposition(std::move(g), std::move(h), {}, true) {}

  CharacterDecomposition(GroupPtr g, Subgroup h, std::vector<size_t> x)
      : CharacterDecomposition(std::move(g), std::move(h), std::move(x),
                               false) {}

  const GroupPtr& parent() const { return parent_; }
  const Subgroup& subgroup() const { return h_; }
  const std::vector<size_t>& trivial_on_h() const { return trivial_; }
  const std::vector<size_t>& transversal_x() const { return x_; }

 private:
  CharacterDecomposition(GroupPtr g, Subgroup h, std::vector<size_t> x,
                         bool canonical)
      : parent_(std::move(g)), h_(std::move(h)) {
    const size_t n = parent_->size();
    std::vector<bool> trivial(n, false);
    for (size_t a = 0; a < n; ++a) {
      Character chi{parent_, a};
      if (chi.trivial_on(h_)) {
        trivial[a] = true;
        trivial_.push_back(a);
      }
    }
    if (trivial_.size() * h_.order() != n)
      throw std::invalid_argument("CharacterDecomposition: bad fixed group size");
    // Coset structure of the dual modulo the trivial-on-H characters.
    std::vector<size_t> coset_key(n, SIZE_MAX);
    for (size_t a = 0; a < n; ++a) {
      if (coset_key[a] != SIZE_MAX) continue;
      for (size_t t : trivial_) coset_key[parent_->op(a, t)] = a;
    }
    if (canonical) {
      // Lexicographically smallest exponent vector per coset.
      std::vector<size_t> best_by_key(n, SIZE_MAX);
      for (size_t a = 0; a < n; ++a) {
        size_t key = coset_key[a];
        size_t& best = best_by_key[key];
        if (best == SIZE_MAX) {
          best = a;
          continue;
        }
        Element va = parent_->element(a);
        Element vb = parent_->element(best);
        if (std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                         vb.end()))
          best = a;
      }
      for (size_t key = 0; key < n; ++key)
        if (best_by_key[key] != SIZE_MAX && coset_key[key] == key)
          x_.push_back(best_by_key[key]);
      std::sort(x_.begin(), x_.end());
    } else {
      x_ = std::move(x);
    }
    if (x_.size() != h_.order())
      throw std::invalid_argument("CharacterDecomposition: |X| != |H|");
    std::set<size_t> keys;
    for (size_t a : x_) {
      if (a >= n) throw std::invalid_argument("CharacterDecomposition: bad X");
      if (!keys.insert(coset_key[a]).second)
        throw std::invalid_argument(
            "CharacterDecomposition: X repeats a coset");
    }
  }

  GroupPtr parent_;
  Subgroup h_;
  std::vector<size_t> trivial_;
  std::vector<size_t> x_;
};

inline CharacterDecomposition character_decomposition(GroupPtr g, Subgroup h) {
  return CharacterDecomposition(std::move(g), std::move(h));
}

// Multiplication table of an arbitrary finite group. Construction checks
// the Latin-square property, associativity over all triples and two-sided
// inverses, so a CayleyGroup value is a genuine group at desk scale.
class CayleyGroup {
 public:
  explicit CayleyGroup(std::vector<std::vector<int>> table)
      : table_(std::move(table)) {
    const size_t m = table_.size();
    if (m == 0 || m > 64)
      throw std::invalid_argument("CayleyGroup: unsupported size");
    for (const auto& row : table_) {
      if (row.size() != m)
        throw std::invalid_argument("CayleyGroup: table not square");
      for (int v : row)
        if (v < 0 || static_cast<size_t>(v) >= m)
          throw std::invalid_argument("CayleyGroup: entry out of range");
    }
    for (size_t i = 0; i < m; ++i) {
      std::vector<bool> row_seen(m, false), col_seen(m, false);
      for (size_t j = 0; j < m; ++j) {
        if (row_seen[static_cast<size_t>(table_[i][j])])
          throw std::invalid_argument("CayleyGroup: not a Latin square (row)");
        row_seen[static_cast<size_t>(table_[i][j])] = true;
        if (col_seen[static_cast<size_t>(table_[j][i])])
          throw std::invalid_argument("CayleyGroup: not a Latin square (col)");
        col_seen[static_cast<size_t>(table_[j][i])] = true;
      }
    }
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b)
        for (size_t c = 0; c < m; ++c)
          if (op(op(a, b), c) != op(a, op(b, c)))
            throw std::invalid_argument("CayleyGroup: not associative");
    identity_ = SIZE_MAX;
    for (size_t e = 0; e < m; ++e) {
      bool ok = true;
      for (size_t a = 0; a < m; ++a)
        if (op(e, a) != a || op(a, e) != a) {
          ok = false;
          break;
        }
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ == SIZE_MAX)
      throw std::invalid_argument("CayleyGroup: no identity");
    inverse_.assign(m, SIZE_MAX);
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b)
        if (op(a, b) == identity_ && op(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      if (inverse_[a] == SIZE_MAX)
        throw std::invalid_argument("CayleyGroup: missing inverse");
    }
  }

  size_t size() const { return table_.size(); }
  size_t identity() const { return identity_; }
  size_t op(size_t a, size_t b) const {
    return static_cast<size_t>(table_[a][b]);
  }
  size_t inverse(size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_abelian() const {
    for (size_t a = 0; a < size(); ++a)
      for (size_t b = a + 1; b < size(); ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

 private:
  std::vector<std::vector<int>> table_;
  size_t identity_ = 0;
  std::vector<size_t> inverse_;
};

inline CayleyGroup cayley(const Group& g) {
  std::vector<std::vector<int>> table(g.size(), std::vector<int>(g.size()));
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size(); ++b)
      table[a][b] = static_cast<int>(g.op(a, b));
  return CayleyGroup(std::move(table));
}

// Dihedral group of order n (n even): rotations r^i and reflections r^i s,
// with s r s = r^{-1}. Index of r^i s^j is i + (n/2) j.
inline CayleyGroup dihedral_cayley(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("dihedral_cayley: order must be even and >= 2");
  const int half = order / 2;
  auto index = [half](int i, int j) { return i + half * j; };
  std::vector<std::vector<int>> table(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
  for (int i1 = 0; i1 < half; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < half; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int rot = j1 == 0 ? (i1 + i2) % half : mod_floor(i1 - i2, half);
          table[static_cast<size_t>(index(i1, j1))]
               [static_cast<size_t>(index(i2, j2))] =
                   index(rot, (j1 + j2) % 2);
        }
  return CayleyGroup(std::move(table));
}

// Closure of a generator set inside a Cayley-table group.
inline std::vector<size_t> cayley_closure(const CayleyGroup& g,
                                          const std::vector<size_t>& gens) {
  std::vector<bool> in(g.size(), false);
  std::vector<size_t> members{g.identity()};
  in[g.identity()] = true;
  for (size_t e : gens)
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    size_t cur = members.size();
    for (size_t i = 0; i < cur; ++i)
      for (size_t j = 0; j < cur; ++j) {
        size_t p = g.op(members[i], members[j]);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Every subgroup, found by growing closures one generator at a time.
// Desk-scale only (|G| <= 64).
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->size() > 64)
    throw std::invalid_argument("all_subgroups: group too large");
  std::set<std::vector<size_t>> seen;
  std::vector<std::vector<size_t>> work;
  std::vector<size_t> trivial{g->identity()};
  seen.insert(trivial);
  work.push_back(trivial);
  while (!work.empty()) {
    std::vector<std::vector<size_t>> next;
    for (const auto& members : work)
      for (size_t e = 0; e < g->size(); ++e) {
        if (std::binary_search(members.begin(), members.end(), e)) continue;
        std::vector<size_t> gens = members;
        gens.push_back(e);
        Subgroup grown = subgroup_closure(g, gens);
        if (seen.insert(grown.elements()).second)
          next.push_back(grown.elements());
      }
    work = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.emplace_back(g, members);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

// Group spec strings: "C8xC2", "C4", "C2^4", "D16" (case-insensitive,
// 'x'-separated cyclic factors, '^' repetition; dihedral specs stand alone).
struct GroupSpec {
  enum class Kind { Abelian, Dihedral };
  Kind kind = Kind::Abelian;
  std::vector<int> orders;   // cyclic factor orders (abelian)
  int dihedral_order = 0;    // group order (dihedral)
  std::string canonical;

  GroupPtr group() const {
    if (kind != Kind::Abelian)
      throw std::invalid_argument("GroupSpec: not an abelian spec");
    return make_group(orders);
  }
  CayleyGroup cayley_group() const {
    if (kind == Kind::Dihedral) return dihedral_cayley(dihedral_order);
    return cayley(*group());
  }
  size_t size() const {
    if (kind == Kind::Dihedral) return static_cast<size_t>(dihedral_order);
    size_t s = 1;
    for (int n : orders) s *= static_cast<size_t>(n);
    return s;
  }
};

inline GroupSpec parse_group_spec(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s.empty()) throw std::invalid_argument("empty group spec");
  GroupSpec spec;
  if (s[0] == 'D') {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(s.substr(1), &used);
      if (used + 1 != s.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group spec: " + text);
    }
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("dihedral order must be even and >= 2");
    spec.kind = GroupSpec::Kind::Dihedral;
    spec.dihedral_order = n;
    spec.canonical = "D" + std::to_string(n);
    return spec;
  }
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('X', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (tok.empty() || tok[0] != 'C')
      throw std::invalid_argument("bad group spec: " + text);
    int n = 0, rep = 1;
    size_t caret = tok.find('^');
    try {
      size_t used = 0;
      n = std::stoi(tok.substr(1, caret == std::string::npos ? caret : caret - 1),
                    &used);
      if (caret != std::string::npos) rep = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group spec: " + text);
    }
    if (n < 1 || rep < 1)
      throw std::invalid_argument("bad group spec: " + text);
    for (int i = 0; i < rep; ++i) spec.orders.push_back(n);
  }
  if (spec.orders.empty())
    throw std::invalid_argument("bad group spec: " + text);
  spec.canonical.clear();
  for (size_t i = 0; i < spec.orders.size(); ++i) {
    if (i) spec.canonical += "x";
    spec.canonical += "C" + std::to_string(spec.orders[i]);
  }
  return spec;
}

}  // namespace gdet
