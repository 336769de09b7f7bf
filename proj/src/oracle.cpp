#include "tlb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <string>

namespace tlb {

std::map<SignedPermutation, int> bfs_coxeter(int n) {
  std::map<SignedPermutation, int> dist;
  std::deque<SignedPermutation> queue;
  SignedPermutation id(n);
  dist[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    SignedPermutation w = queue.front();
    queue.pop_front();
    for (CoxGen g = 0; g < n; ++g) {
      SignedPermutation x = w.times(g);
      if (dist.emplace(x, dist[w] + 1).second) queue.push_back(x);
    }
  }
  return dist;
}

// ------------------------------------------------------------ word oracle

namespace {

// Positive words: '0' is b_1, '0'+i is g_i.
constexpr char kB = '0';
char gch(int i) { return static_cast<char>('0' + i); }
int gindex(char c) { return c - '0'; }

struct FramedWord {
  std::array<uint8_t, kMaxN> a{};
  std::string w;
  auto operator<=>(const FramedWord&) const = default;
};

using Comb = std::map<FramedWord, Scalar>;

void add(Comb& c, const FramedWord& f, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = c.try_emplace(f, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) c.erase(it);
  }
}

// f * t_j^k with the framing moved to the front
FramedWord push_t(FramedWord f, int j, int k, int d) {
  for (auto it = f.w.rbegin(); it != f.w.rend(); ++it) {
    int i = gindex(*it);
    if (i == 0) continue;
    if (j == i) j = i + 1;
    else if (j == i + 1) j = i;
  }
  f.a[j - 1] = static_cast<uint8_t>(((f.a[j - 1] + k) % d + d) % d);
  return f;
}

class WordTracer {
 public:
  WordTracer(int d, long budget) : d_(d), budget_(budget), D_(d), du_(delta(kU)), dv_(delta(kV)) {}

  Comb append(const Comb& in, const Letter& l) const {
    Comb out;
    for (const auto& [f, c] : in) {
      switch (l.kind) {
        case Letter::G: {
          FramedWord g = f;
          g.w += gch(l.index);
          add(out, g, c);
          break;
        }
        case Letter::B: {
          FramedWord g = f;
          g.w += kB;
          add(out, g, c);
          break;
        }
        case Letter::T:
          add(out, push_t(f, l.index, l.power, d_), c);
          break;
        case Letter::GInv: {
          // g^{-1} = g - (u - u^{-1}) e_i
          FramedWord g = f;
          g.w += gch(l.index);
          add(out, g, c);
          for (int s = 0; s < d_; ++s)
            add(out, push_t(push_t(f, l.index, s, d_), l.index + 1, -s, d_), -c * du_ / D_);
          break;
        }
        case Letter::BInv: {
          // b^{-1} = b - (v - v^{-1}) f_1
          FramedWord g = f;
          g.w += kB;
          add(out, g, c);
          for (int s = 0; s < d_; ++s) add(out, push_t(f, 1, s, d_), -c * dv_ / D_);
          break;
        }
      }
    }
    return out;
  }

  Comb append_word(Comb c, const Word& w) const {
    for (const auto& l : w) c = append(c, l);
    return c;
  }

  Scalar run(const Word& word, int n) {
    Comb c;
    add(c, FramedWord{}, Scalar(1));
    c = append_word(c, word);
    for (int k = n; k >= 1; --k) c = level(c, k);
    Scalar total;
    for (const auto& [f, s] : c) total += s;
    return total;
  }

 private:
  void spend() {
    if (--budget_ < 0) throw OracleBudgetExceeded("word oracle: rewriting step budget exceeded");
  }

  static bool commute(char x, char y) {
    int i = gindex(x), j = gindex(y);
    if (i == 0 || j == 0) return std::max(i, j) >= 2;
    return std::abs(i - j) >= 2;
  }

  // all words reachable by braid moves, in lexicographic order
  std::set<std::string> braid_class(const std::string& w) {
    std::set<std::string> seen{w};
    std::deque<std::string> queue{w};
    auto visit = [&](std::string x) {
      if (seen.insert(x).second) {
        spend();
        queue.push_back(std::move(x));
      }
    };
    while (!queue.empty()) {
      std::string x = queue.front();
      queue.pop_front();
      for (size_t p = 0; p + 1 < x.size(); ++p) {
        if (x[p] != x[p + 1] && commute(x[p], x[p + 1])) {
          std::string y = x;
          std::swap(y[p], y[p + 1]);
          visit(y);
        }
        if (p + 2 < x.size() && x[p] == x[p + 2] && x[p] != kB && x[p + 1] != kB &&
            std::abs(gindex(x[p]) - gindex(x[p + 1])) == 1) {
          std::string y = x;
          std::swap(y[p], y[p + 1]);
          y[p + 2] = y[p];
          visit(y);
        }
        if (p + 3 < x.size() && x[p] == x[p + 2] && x[p + 1] == x[p + 3] &&
            ((x[p] == kB && x[p + 1] == gch(1)) || (x[p] == gch(1) && x[p + 1] == kB))) {
          std::string y = x;
          std::swap(y[p], y[p + 1]);
          std::swap(y[p + 2], y[p + 3]);
          visit(y);
        }
      }
    }
    return seen;
  }

  static std::string loop_word(int n) {
    std::string s;
    for (int i = n - 1; i >= 1; --i) s += gch(i);
    s += kB;
    for (int i = 1; i <= n - 1; ++i) s += gch(i);
    return s;
  }

  Scalar x_sym(int k) const { return k == 0 ? Scalar(1) : Scalar::var(var_x(k)); }
  Scalar y_sym(int k) const { return Scalar::var(var_y(k)); }

  static FramedWord restricted(const FramedWord& f, int n, const std::string& w) {
    FramedWord r;
    for (int i = 0; i < n - 1; ++i) r.a[i] = f.a[i];
    r.w = w;
    return r;
  }

  // Tr(t^a w) over n strands expressed over n - 1 strands
  Comb level(Comb work, int n) {
    Comb out;
    while (!work.empty()) {
      // longest words first so that rewritten terms merge before use
      auto it = std::max_element(work.begin(), work.end(), [](const auto& x, const auto& y) {
        return x.first.w.size() < y.first.w.size() || (x.first.w.size() == y.first.w.size() && x.first < y.first);
      });
      FramedWord f = it->first;
      Scalar c = it->second;
      work.erase(it);
      spend();
      std::set<std::string> cls = braid_class(f.w);
      bool done = false;
      for (const auto& w : cls) {
        for (size_t p = 0; p + 1 < w.size(); ++p) {
          if (w[p] != w[p + 1]) continue;
          // P x x Q = P Q + (q - q^{-1}) P (idempotent) x Q
          FramedWord pre{f.a, w.substr(0, p)};
          std::string rest = w.substr(p + 2);
          add(work, FramedWord{f.a, pre.w + rest}, c);
          int i = gindex(w[p]);
          for (int s = 0; s < d_; ++s) {
            FramedWord g = i == 0 ? push_t(pre, 1, s, d_) : push_t(push_t(pre, i, s, d_), i + 1, -s, d_);
            g.w += w[p];
            g.w += rest;
            add(work, g, c * (i == 0 ? dv_ : du_) / D_);
          }
          done = true;
          break;
        }
        if (done) break;
      }
      if (done) continue;
      if (n == 1) {
        if (f.w.empty()) add(out, FramedWord{}, c * x_sym(f.a[0]));
        else if (f.w == std::string(1, kB)) add(out, FramedWord{}, c * y_sym(f.a[0]));
        else throw OracleBudgetExceeded("word oracle: unexpected word on one strand");
        continue;
      }
      char top = gch(n - 1);
      for (const auto& w : cls) {
        size_t cnt = std::count(w.begin(), w.end(), top);
        if (cnt == 0) {
          add(out, restricted(f, n, w), c * x_sym(f.a[n - 1]));
        } else if (cnt == 1) {
          size_t p = w.find(top);
          std::string U = w.substr(0, p), V = w.substr(p + 1);
          Comb t;
          FramedWord g;
          g.a[n - 2] = f.a[n - 1];
          g.w = V;
          add(t, g, Scalar(1));
          for (int j = 1; j <= n - 1; ++j) t = append(t, Letter::t(j, f.a[j - 1]));
          for (char ch : U) t = append(t, gindex(ch) == 0 ? Letter::b() : Letter::g(gindex(ch)));
          for (const auto& [h, s] : t) add(out, h, c * Scalar::var(kZ) * s);
        } else {
          continue;
        }
        done = true;
        break;
      }
      if (done) continue;
      std::string L = loop_word(n);
      for (const auto& w : cls) {
        if (w.size() < L.size() || w.compare(w.size() - L.size(), L.size(), L) != 0) continue;
        std::string U = w.substr(0, w.size() - L.size());
        if (U.find(top) != std::string::npos) continue;
        // U g_{n-1}..g_1 b g_1..g_{n-1} with g_j = g_j^{-1} + (u - u^{-1}) e_j;
        // the all-inverse term is U b_n
        add(out, restricted(f, n, U), c * y_sym(f.a[n - 1]));
        FramedWord head{f.a, U + L.substr(0, n)};
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
          Comb t;
          add(t, head, c);
          for (int j = 1; j <= n - 1; ++j) {
            if (mask & (1u << (j - 1))) {
              Comb e;
              for (int s = 0; s < d_; ++s) {
                Comb a = append(append(t, Letter::t(j, s)), Letter::t(j + 1, d_ - s));
                for (const auto& [h, v] : a) add(e, h, v * du_ / D_);
              }
              t = std::move(e);
            } else {
              t = append(t, Letter::g_inv(j));
            }
          }
          for (const auto& [h, v] : t) add(work, h, v);
        }
        done = true;
        break;
      }
      if (!done) throw OracleBudgetExceeded("word oracle: no peelable form for " + f.w);
    }
    return out;
  }

  int d_;
  long budget_;
  Scalar D_, du_, dv_;
};

}  // namespace

Scalar word_trace_oracle(const Word& word, int n, int d, const TraceParams& p, long step_budget) {
  if (p.d != d) throw std::invalid_argument("oracle: modulus mismatch");
  for (const auto& l : word) {
    bool bad = (l.kind == Letter::G || l.kind == Letter::GInv) ? (l.index < 1 || l.index >= n)
               : l.kind == Letter::T                          ? (l.index < 1 || l.index > n)
                                                              : false;
    if (bad) throw std::invalid_argument("oracle: letter index out of range");
  }
  WordTracer t(d, step_budget);
  return substitute(t.run(word, n), p.bindings());
}

// ------------------------------------------------------------ structure table

StructureTable::StructureTable(int n, int d, size_t cache_limit)
    : n_(n), d_(d), basis_(enumerate_basis(n, d)) {
  cache_ = basis_.size() <= cache_limit;
  for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

size_t StructureTable::index(const BasisMonomial& m) const { return index_.at(m); }

AlgebraElement StructureTable::product(size_t i, size_t j) {
  auto key = std::make_pair(i, j);
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  AlgebraElement p = AlgebraElement::basis(d_, basis_[i]) * AlgebraElement::basis(d_, basis_[j]);
  if (cache_) table_.emplace(key, p);
  return p;
}

AlgebraElement StructureTable::multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r(n_, d_);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r += (ca * cb) * product(index(a), index(b));
  return r;
}

bool CertifyReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

namespace {

std::vector<CoxGen> to_gens(const std::string& w) {
  std::vector<CoxGen> out;
  for (char c : w) out.push_back(gindex(c));
  return out;
}

// every reduced word of w, by braid moves from one of them
std::set<std::string> reduced_words(const SignedPermutation& w) {
  std::string s;
  for (CoxGen g : w.reduced_word()) s += gch(g);
  std::set<std::string> seen{s};
  std::deque<std::string> queue{s};
  while (!queue.empty()) {
    std::string x = queue.front();
    queue.pop_front();
    for (size_t p = 0; p + 1 < x.size(); ++p) {
      std::vector<std::string> next;
      int i = gindex(x[p]), j = gindex(x[p + 1]);
      bool comm = (i == 0 || j == 0) ? std::max(i, j) >= 2 : std::abs(i - j) >= 2;
      if (i != j && comm) {
        std::string y = x;
        std::swap(y[p], y[p + 1]);
        next.push_back(y);
      }
      if (p + 2 < x.size() && x[p] == x[p + 2] && i > 0 && j > 0 && std::abs(i - j) == 1) {
        std::string y = x;
        std::swap(y[p], y[p + 1]);
        y[p + 2] = y[p];
        next.push_back(y);
      }
      if (p + 3 < x.size() && x[p] == x[p + 2] && x[p + 1] == x[p + 3] && std::min(i, j) == 0 && std::max(i, j) == 1) {
        std::string y = x;
        std::swap(y[p], y[p + 1]);
        std::swap(y[p + 2], y[p + 3]);
        next.push_back(y);
      }
      for (auto& y : next)
        if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

CertifyReport certify_algebra(int n, int d, uint64_t seed, int samples) {
  CertifyReport rep;
  StructureTable st(n, d);
  const auto& basis = st.basis();
  size_t N = basis.size();
  auto line = [&](const std::string& label, bool pass, const std::string& detail = "") {
    rep.lines.push_back({label + " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")", pass, detail});
  };

  long expected = factorial(n) << n;
  for (int i = 0; i < n; ++i) expected *= d;
  line("basis count " + std::to_string(N), static_cast<long>(N) == expected,
       "expected " + std::to_string(expected));

  auto bfs = bfs_coxeter(n);
  bool lengths = bfs.size() == all_signed_permutations(n).size();
  for (const auto& [w, l] : bfs) lengths = lengths && w.length() == l;
  line("Coxeter lengths agree with breadth-first search", lengths);

  AlgebraElement one = AlgebraElement::one(n, d);
  bool unit = true;
  for (const auto& m : basis) {
    AlgebraElement e = AlgebraElement::basis(d, m);
    unit = unit && st.multiply(one, e) == e && st.multiply(e, one) == e;
  }
  line("unit laws", unit);

  std::set<BasisMonomial> basis_set(basis.begin(), basis.end());
  bool closed = true;
  auto in_basis = [&](const AlgebraElement& x) {
    for (const auto& [m, c] : x.terms())
      if (!basis_set.count(m)) return false;
    return true;
  };
  auto elem = [&](size_t i) { return AlgebraElement::basis(d, basis[i]); };
  auto assoc = [&](size_t i, size_t j, size_t k) {
    AlgebraElement ij = st.product(i, j), jk = st.product(j, k);
    closed = closed && in_basis(ij) && in_basis(jk);
    AlgebraElement left = st.multiply(ij, elem(k));
    AlgebraElement right = st.multiply(elem(i), jk);
    return left == right;
  };
  std::string witness;
  bool associative = true;
  if (N <= 32) {
    for (size_t i = 0; i < N && associative; ++i)
      for (size_t j = 0; j < N && associative; ++j)
        for (size_t k = 0; k < N && associative; ++k)
          if (!assoc(i, j, k)) {
            associative = false;
            witness = basis[i].str() + " " + basis[j].str() + " " + basis[k].str();
          }
    line("associativity on all " + std::to_string(N * N * N) + " triples", associative, witness);
  } else {
    if (samples <= 0) samples = N > 400 ? 250 : 1000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, N - 1);
    for (int s = 0; s < samples && associative; ++s) {
      size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (!assoc(i, j, k)) {
        associative = false;
        witness = basis[i].str() + " " + basis[j].str() + " " + basis[k].str();
      }
    }
    line("associativity on " + std::to_string(samples) + " seeded triples", associative, witness);
  }
  line("products close over the basis", closed);

  // defining relations, multiplied on the left by every basis monomial
  std::vector<std::pair<std::string, std::pair<Word, std::function<AlgebraElement(const AlgebraElement&)>>>> rels;
  Scalar du(delta(kU)), dv(delta(kV));
  for (int j = 1; j <= n; ++j) {
    Word w(d, Letter::t(j, 1));
    rels.push_back({"t" + std::to_string(j) + "^d = 1", {w, [](const AlgebraElement& x) { return x; }}});
    for (int k = j + 1; k <= n; ++k)
      rels.push_back({"t" + std::to_string(j) + " t" + std::to_string(k) + " = t" + std::to_string(k) + " t" + std::to_string(j),
                      {{Letter::t(j, 1), Letter::t(k, 1)},
                       [j, k](const AlgebraElement& x) { return x.mul_word({Letter::t(k, 1), Letter::t(j, 1)}); }}});
    rels.push_back({"b1 t" + std::to_string(j) + " = t" + std::to_string(j) + " b1",
                    {{Letter::b(), Letter::t(j, 1)},
                     [j](const AlgebraElement& x) { return x.mul_word({Letter::t(j, 1), Letter::b()}); }}});
    for (int i = 1; i < n; ++i) {
      int sj = j == i ? i + 1 : j == i + 1 ? i : j;
      rels.push_back({"g" + std::to_string(i) + " t" + std::to_string(j) + " = t" + std::to_string(sj) + " g" + std::to_string(i),
                      {{Letter::g(i), Letter::t(j, 1)},
                       [i, sj](const AlgebraElement& x) { return x.mul_word({Letter::t(sj, 1), Letter::g(i)}); }}});
    }
  }
  for (int i = 1; i < n; ++i) {
    rels.push_back({"g" + std::to_string(i) + "^2 = 1 + (u - u^-1) e" + std::to_string(i) + " g" + std::to_string(i),
                    {{Letter::g(i), Letter::g(i)}, [i, n, d, du](const AlgebraElement& x) {
                       return x + du * (x * idempotent_e(i, i + 1, 0, n, d)).mul_word({Letter::g(i)});
                     }}});
    rels.push_back({"g" + std::to_string(i) + " g" + std::to_string(i) + "^-1 = 1",
                    {{Letter::g(i), Letter::g_inv(i)}, [](const AlgebraElement& x) { return x; }}});
    if (i + 1 < n)
      rels.push_back({"braid relation g" + std::to_string(i) + " g" + std::to_string(i + 1),
                      {{Letter::g(i), Letter::g(i + 1), Letter::g(i)}, [i](const AlgebraElement& x) {
                         return x.mul_word({Letter::g(i + 1), Letter::g(i), Letter::g(i + 1)});
                       }}});
    for (int k = i + 2; k < n; ++k)
      rels.push_back({"g" + std::to_string(i) + " g" + std::to_string(k) + " commute",
                      {{Letter::g(i), Letter::g(k)},
                       [i, k](const AlgebraElement& x) { return x.mul_word({Letter::g(k), Letter::g(i)}); }}});
    if (i >= 2)
      rels.push_back({"b1 g" + std::to_string(i) + " commute",
                      {{Letter::b(), Letter::g(i)},
                       [i](const AlgebraElement& x) { return x.mul_word({Letter::g(i), Letter::b()}); }}});
  }
  rels.push_back({"b1^2 = 1 + (v - v^-1) f1 b1", {{Letter::b(), Letter::b()}, [n, d, dv](const AlgebraElement& x) {
                    return x + dv * (x * idempotent_f(1, 0, n, d)).mul_word({Letter::b()});
                  }}});
  rels.push_back({"b1 b1^-1 = 1", {{Letter::b(), Letter::b_inv()}, [](const AlgebraElement& x) { return x; }}});
  if (n >= 2)
    rels.push_back({"b1 g1 b1 g1 = g1 b1 g1 b1",
                    {{Letter::b(), Letter::g(1), Letter::b(), Letter::g(1)}, [](const AlgebraElement& x) {
                       return x.mul_word({Letter::g(1), Letter::b(), Letter::g(1), Letter::b()});
                     }}});
  for (const auto& [label, rel] : rels) {
    bool ok = true;
    std::string w;
    for (const auto& m : basis) {
      AlgebraElement x = AlgebraElement::basis(d, m);
      if (!(x.mul_word(rel.first) == rel.second(x))) {
        ok = false;
        w = "fails after " + m.str();
        break;
      }
    }
    line("relation " + label, ok, w);
  }

  // T_w does not depend on the reduced word
  bool confluent = true;
  std::string cw;
  for (const auto& w : all_signed_permutations(n)) {
    BasisMonomial m(std::vector<int>(n, 0), w, d);
    AlgebraElement expect = AlgebraElement::basis(d, m);
    for (const auto& rw : reduced_words(w)) {
      if (!(AlgebraElement::from_word(n, d, coxeter_to_word(to_gens(rw))) == expect)) {
        confluent = false;
        cw = w.str() + " via " + rw;
        break;
      }
    }
    if (!confluent) break;
  }
  line("T_w independent of the reduced word", confluent, cw);
  return rep;
}

}  // namespace tlb
