#include "qcover/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qcover {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << '*';
    const auto g = letter_generator(w[i]);
    os << (g < names.size() ? names[g] : "g" + std::to_string(g));
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo),
              w.begin() + static_cast<std::ptrdiff_t>(hi));
}

// Least rotation of w or of its inverse.
Word canonical_relator(const Word& r) {
  Word best;
  bool first = true;
  for (const auto& w : {cyclic_reduce(r), cyclic_reduce(inverse_word(r))}) {
    for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
      Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

Presentation presentation_from_quandle(const IPQuandle& q) {
  Presentation p;
  p.generators = q.size();
  p.names = q.names();
  std::set<Word> seen;
  auto add = [&](Word w) {
    w = free_reduce(std::move(w));
    if (w.empty()) return;
    if (seen.insert(canonical_relator(w)).second) p.relators.push_back(std::move(w));
  };
  const auto m = static_cast<std::uint32_t>(q.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      add({gen_letter(q.act(a, b)), gen_letter(a), inv_letter(b), inv_letter(a)});
    }
  }
  for (std::uint32_t a = 0; a < m; ++a) add({gen_letter(a), gen_letter(q.inv(a))});
  return p;
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (auto l : w) coset = act(coset, column_of(l));
  return coset;
}

bool Realization::embeddable() const {
  std::set<std::size_t> seen;
  for (auto g : generator_elements) {
    if (g == group->identity() || !seen.insert(g).second) return false;
  }
  return true;
}

Realization group_from_coset_table(const CosetTable& table, std::size_t generators) {
  auto action = std::make_shared<const RegularAction>(table.cosets, table.columns, table.table,
                                                      table.column_inverse);
  std::vector<GroupElement> gens;
  for (std::size_t g = 0; g < generators; ++g) {
    gens.push_back(CosetElement{action, table.act(0, table.generator_column[g])});
  }
  Realization r;
  r.table = table;
  auto group = std::make_shared<FiniteGroup>(closure_from_generators(gens, table.cosets));
  r.generator_elements = group->generators();
  r.coset_element.resize(table.cosets);
  for (std::uint32_t c = 0; c < table.cosets; ++c) {
    r.coset_element[c] = group->index_of(CosetElement{action, c});
  }
  r.group = std::move(group);
  return r;
}

std::optional<Realization> realize(const IPQuandle& q, std::size_t max_cosets,
                                   std::size_t* high_water) {
  auto result = todd_coxeter(presentation_from_quandle(q), max_cosets);
  if (auto* ex = std::get_if<EnumerationExceeded>(&result)) {
    if (high_water) *high_water = ex->high_water;
    return std::nullopt;
  }
  auto& table = std::get<CosetTable>(result);
  if (high_water) *high_water = table.high_water;
  return group_from_coset_table(table, q.size());
}

CoverReport covering_analysis(const IPQuandle& q, std::size_t max_cosets) {
  if (!q.embedding()) throw InvalidParameter("covering analysis needs a conjugation quandle");
  const auto& emb = *q.embedding();
  const auto& g = *emb.group;

  std::size_t high_water = 0;
  auto r = realize(q, max_cosets, &high_water);
  if (!r) throw EnumerationIncomplete(high_water);

  const auto& t = r->table;
  std::vector<std::size_t> column_image(t.columns);
  for (std::size_t k = 0; k < q.size(); ++k) {
    column_image[t.generator_column[k]] = emb.elements[k];
    column_image[t.inverse_generator_column[k]] = g.inverse(emb.elements[k]);
  }

  // pi on cosets along a BFS tree, then checked on every table entry.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pi(t.cosets, unset);
  pi[0] = g.identity();
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < t.columns; ++x) {
      auto d = t.act(c, x);
      if (pi[d] == unset) {
        pi[d] = g.multiply(pi[c], column_image[x]);
        queue.push_back(d);
      }
    }
  }
  for (std::uint32_t c = 0; c < t.cosets; ++c) {
    for (std::uint32_t x = 0; x < t.columns; ++x) {
      if (pi[t.act(c, x)] != g.multiply(pi[c], column_image[x])) {
        throw Error("relations of G_C do not hold in the target group");
      }
    }
  }

  CoverReport rep;
  rep.order_gc = t.cosets;
  rep.order_g = g.order();
  rep.projection.assign(t.cosets, 0);
  std::vector<bool> hit(g.order(), false);
  for (std::uint32_t c = 0; c < t.cosets; ++c) {
    rep.projection[r->coset_element[c]] = pi[c];
    hit[pi[c]] = true;
    if (pi[c] == g.identity()) rep.kernel.push_back(r->coset_element[c]);
  }
  std::sort(rep.kernel.begin(), rep.kernel.end());
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw Error("projection G_C -> G is not surjective");
  }
  rep.kernel_order = rep.kernel.size();
  if (rep.order_gc != rep.order_g * rep.kernel_order) {
    throw Error("kernel size does not match |G_C| / |G|");
  }
  rep.kernel_central = std::all_of(rep.kernel.begin(), rep.kernel.end(),
                                   [&](std::size_t n) { return is_central(*r->group, n); });
  rep.embeddable = r->embeddable();
  rep.is_covering = rep.kernel_order == 1;
  rep.realization = std::move(*r);
  return rep;
}

IntMatrix relator_exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (auto l : p.relators[i]) m(i, letter_generator(l)) += l > 0 ? 1 : -1;
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  AbelianInvariants out;
  const auto snf = smith_normal_form(relator_exponent_matrix(p));
  std::size_t rank = 0;
  for (const auto& d : snf.diagonal) {
    if (sgn(d) == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = p.generators - rank;
  return out;
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (auto l : w) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(l));
    return h;
  }
};

struct Visit {
  Word parent;
  ProofStep step;  // how this word was obtained from parent
  std::size_t depth = 0;
};

using VisitMap = std::unordered_map<Word, Visit, WordHash>;

class Rewriter {
 public:
  Rewriter(const Presentation& p, std::size_t max_length) : max_length_(max_length) {
    std::set<Word> conjugates;
    for (const auto& r : p.relators) {
      for (const auto& w : {r, inverse_word(r)}) {
        for (std::size_t k = 0; k < w.size(); ++k) {
          Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
          conjugates.insert(std::move(rot));
        }
      }
    }
    std::map<Word, std::set<Word>> subs;
    for (const auto& r : conjugates) {
      for (std::size_t k = 0; k <= r.size(); ++k) {
        Word u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
        Word v = inverse_word(Word(r.begin() + static_cast<std::ptrdiff_t>(k), r.end()));
        if (u != v) subs[u].insert(v);
      }
    }
    for (auto& [u, vs] : subs) substitutions_.emplace(u, std::vector<Word>(vs.begin(), vs.end()));
    for (std::uint32_t g = 0; g < p.generators; ++g) {
      letters_.push_back(gen_letter(g));
      letters_.push_back(inv_letter(g));
    }
  }

  template <class F>
  void for_each_neighbor(const Word& w, F&& visit) const {
    auto emit = [&](std::size_t pos, std::size_t len, const Word& inserted, bool relator) {
      if (w.size() - len + inserted.size() > max_length_) return;
      ProofStep s;
      s.position = pos;
      s.removed.assign(w.begin() + static_cast<std::ptrdiff_t>(pos),
                       w.begin() + static_cast<std::ptrdiff_t>(pos + len));
      s.inserted = inserted;
      s.relator = relator;
      s.word.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      s.word.insert(s.word.end(), inserted.begin(), inserted.end());
      s.word.insert(s.word.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
      visit(std::move(s));
    };
    for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
      if (w[pos + 1] == -w[pos]) emit(pos, 2, {}, false);
    }
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (auto x : letters_) emit(pos, 0, {x, -x}, false);
    }
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (std::size_t len = 0; pos + len <= w.size(); ++len) {
        Word u(w.begin() + static_cast<std::ptrdiff_t>(pos),
               w.begin() + static_cast<std::ptrdiff_t>(pos + len));
        auto it = substitutions_.find(u);
        if (it == substitutions_.end()) continue;
        for (const auto& v : it->second) emit(pos, len, v, true);
      }
    }
  }

 private:
  std::size_t max_length_;
  std::map<Word, std::vector<Word>> substitutions_;
  std::vector<Letter> letters_;
};

std::vector<ProofStep> chain_to(const VisitMap& visits, Word w) {
  std::vector<ProofStep> out;
  for (;;) {
    const auto& v = visits.at(w);
    if (v.depth == 0) break;
    out.push_back(v.step);
    w = v.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<ProofStep>> prove_equal_bounded(const Presentation& p,
                                                          const Word& w1, const Word& w2,
                                                          std::size_t depth,
                                                          std::size_t max_length) {
  if (w1 == w2) return std::vector<ProofStep>{};
  if (max_length == 0) {
    std::size_t longest = 0;
    for (const auto& r : p.relators) longest = std::max(longest, r.size());
    max_length = std::max(w1.size(), w2.size()) + 2 + longest;
  }
  Rewriter rw(p, max_length);

  VisitMap fwd, bwd;
  fwd.emplace(w1, Visit{{}, {}, 0});
  bwd.emplace(w2, Visit{{}, {}, 0});
  std::vector<Word> fwd_frontier{w1}, bwd_frontier{w2};
  std::size_t fwd_depth = 0, bwd_depth = 0;

  // Chain w1 -> meet (forward) followed by meet -> w2 (reversed backward moves).
  auto join = [&](const Word& meet) {
    auto chain = chain_to(fwd, meet);
    auto back = chain_to(bwd, meet);
    Word current = meet;
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      const auto& parent = bwd.at(current).parent;
      ProofStep s;
      s.word = parent;
      s.position = it->position;
      s.removed = it->inserted;
      s.inserted = it->removed;
      s.relator = it->relator;
      chain.push_back(std::move(s));
      current = parent;
    }
    return chain;
  };

  while (fwd_depth + bwd_depth < depth) {
    const bool forward = fwd_frontier.size() <= bwd_frontier.size();
    auto& mine = forward ? fwd : bwd;
    auto& other = forward ? bwd : fwd;
    auto& frontier = forward ? fwd_frontier : bwd_frontier;
    auto& level = forward ? fwd_depth : bwd_depth;
    if (frontier.empty()) return std::nullopt;

    std::vector<Word> next;
    std::optional<Word> meet;
    for (const auto& w : frontier) {
      rw.for_each_neighbor(w, [&](ProofStep s) {
        if (meet || mine.count(s.word)) return;
        Word y = s.word;
        mine.emplace(y, Visit{w, std::move(s), level + 1});
        if (other.count(y)) {
          meet = y;
          return;
        }
        next.push_back(std::move(y));
      });
      if (meet) return join(*meet);
    }
    frontier = std::move(next);
    ++level;
  }
  return std::nullopt;
}

std::string ProofStep::describe(const Presentation& p) const {
  if (!relator) {
    return (inserted.empty() ? "delete " + p.format(removed) : "insert " + p.format(inserted)) +
           " at " + std::to_string(position);
  }
  return "rewrite " + p.format(removed) + " -> " + p.format(inserted) + " at " +
         std::to_string(position);
}

bool braid_check(const Realization& r, std::uint32_t a, std::uint32_t b) {
  const auto& g = *r.group;
  const auto x = r.generator_elements[a];
  const auto yi = g.inverse(r.generator_elements[b]);
  return g.multiply(g.multiply(x, yi), x) == g.multiply(g.multiply(yi, x), yi);
}

std::vector<std::size_t> induced_hom(const IPQuandle& q, const FiniteGroup& h,
                                     const std::vector<std::size_t>& j,
                                     const std::vector<std::size_t>& phi) {
  if (!q.embedding()) throw InvalidParameter("induced_hom needs a conjugation quandle");
  const auto& emb = *q.embedding();
  const auto m = static_cast<std::uint32_t>(q.size());
  if (j.size() != m || phi.size() != h.order()) throw InvalidParameter("map sizes do not match");
  for (std::uint32_t a = 0; a < m; ++a) {
    if (j[a] == h.identity()) throw PreconditionFailed("ContainsIdentity", q.name(a));
    if (phi[j[a]] != emb.elements[a]) throw SectionFails(a);
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    if (j[q.inv(a)] != h.inverse(j[a])) throw NotQuandleMap(a, q.inv(a));
    for (std::uint32_t b = 0; b < m; ++b) {
      if (j[q.act(a, b)] != h.conjugate(j[a], j[b])) throw NotQuandleMap(a, b);
    }
  }
  return j;
}

}  // namespace qcover
