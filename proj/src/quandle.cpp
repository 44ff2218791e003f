#include "qcover/quandle.hpp"

#include <deque>
#include <set>

#include "qcover/error.hpp"

namespace qcover {

IPQuandle::IPQuandle(std::vector<std::vector<std::uint32_t>> op,
                     std::vector<std::uint32_t> inv, std::vector<std::string> names)
    : inv_(std::move(inv)) {
  const std::size_t m = inv_.size();
  if (op.size() != m) throw MalformedTable("expected " + std::to_string(m) + " op rows");
  op_.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (op[a].size() != m) {
      throw MalformedTable("op row " + std::to_string(a) + " has wrong length");
    }
    for (auto b : op[a]) {
      if (b >= m) throw MalformedTable("op row " + std::to_string(a) + " entry out of range");
      op_.push_back(b);
    }
  }
  for (auto x : inv_) {
    if (x >= m) throw MalformedTable("inv entry out of range");
  }
  if (names.empty()) {
    for (std::size_t a = 0; a < m; ++a) names_.push_back("q" + std::to_string(a));
  } else {
    if (names.size() != m) throw MalformedTable("names count does not match size");
    if (std::set<std::string>(names.begin(), names.end()).size() != m) {
      throw MalformedTable("names are not distinct");
    }
    names_ = std::move(names);
    custom_names_ = true;
  }
}

std::vector<std::vector<std::uint32_t>> IPQuandle::rows() const {
  std::vector<std::vector<std::uint32_t>> out(size());
  for (std::size_t a = 0; a < size(); ++a) {
    out[a].assign(op_.begin() + a * size(), op_.begin() + (a + 1) * size());
  }
  return out;
}

void IPQuandle::set_embedding(Embedding e) {
  if (e.elements.size() != size()) throw MalformedTable("embedding size mismatch");
  embedding_ = std::move(e);
}

namespace {

void fail(AxiomCheck& check, std::vector<std::uint32_t> witness) {
  if (!check.holds) return;
  check.holds = false;
  check.counterexample = std::move(witness);
}

}  // namespace

AxiomReport verify_ip(const IPQuandle& q) {
  AxiomReport r;
  const auto m = static_cast<std::uint32_t>(q.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    std::vector<bool> hit(m, false);
    for (std::uint32_t b = 0; b < m; ++b) hit[q.act(a, b)] = true;
    for (std::uint32_t b = 0; b < m; ++b) {
      if (!hit[b]) {
        fail(r.bijective_rows, {a});
        break;
      }
    }
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      for (std::uint32_t c = 0; c < m && r.rack.holds; ++c) {
        if (q.act(a, q.act(b, c)) != q.act(q.act(a, b), q.act(a, c))) fail(r.rack, {a, b, c});
      }
    }
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    if (q.act(a, a) != a) fail(r.idempotent, {a});
    if (q.inv(q.inv(a)) != a) fail(r.involution, {a});
    if (q.act(q.inv(a), a) != a) fail(r.derived_fixed_point, {a});
    for (std::uint32_t b = 0; b < m; ++b) {
      if (q.act(a, q.inv(b)) != q.inv(q.act(a, b))) fail(r.inverse_compatible, {a, b});
      if (q.act(q.inv(a), q.act(a, b)) != b) fail(r.cancellation, {a, b});
    }
  }
  return r;
}

IPQuandle conjugation_quandle(std::shared_ptr<const FiniteGroup> group,
                              std::vector<std::size_t> elements,
                              std::vector<std::string> names) {
  const auto& g = *group;
  std::vector<std::ptrdiff_t> slot(g.order(), -1);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto x = elements[k];
    if (x == g.identity()) throw PreconditionFailed("ContainsIdentity", g.label(x));
    if (slot[x] >= 0) throw PreconditionFailed("Duplicate", g.label(x));
    slot[x] = static_cast<std::ptrdiff_t>(k);
  }
  for (auto x : elements) {
    for (auto s : g.generators()) {
      if (slot[g.conjugate(s, x)] < 0) throw PreconditionFailed("NotAdStable", g.label(x));
    }
    if (slot[g.inverse(x)] < 0) throw PreconditionFailed("NotInversionStable", g.label(x));
  }

  // The Cayley graph x -> x c must reach every element.
  std::vector<bool> reached(g.order(), false);
  std::deque<std::size_t> queue{g.identity()};
  reached[g.identity()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto c : elements) {
      auto y = g.multiply(x, c);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  if (count != g.order()) {
    std::size_t witness = 0;
    while (reached[witness]) ++witness;
    throw PreconditionFailed("NotGenerating", g.label(witness));
  }

  const std::size_t m = elements.size();
  std::vector<std::vector<std::uint32_t>> op(m, std::vector<std::uint32_t>(m));
  std::vector<std::uint32_t> inv(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto s = slot[g.conjugate(elements[a], elements[b])];
      if (s < 0) throw PreconditionFailed("NotAdStable", g.label(elements[b]));
      op[a][b] = static_cast<std::uint32_t>(s);
    }
    inv[a] = static_cast<std::uint32_t>(slot[g.inverse(elements[a])]);
  }
  if (names.empty()) {
    for (auto x : elements) names.push_back(g.label(x));
  }
  IPQuandle q(std::move(op), std::move(inv), std::move(names));
  q.set_embedding({std::move(group), std::move(elements)});
  return q;
}

bool mutually_skew(const IPQuandle& q, std::uint32_t a, std::uint32_t b) {
  return q.act(a, b) == q.inv(q.act(b, a));
}

bool mutually_skew(const RightQuandle& q, std::uint32_t a, std::uint32_t b) {
  return q.act(a, b) == q.inv(q.act(b, a));
}

SkewAnalysis skew_analysis(const IPQuandle& q) {
  const auto m = static_cast<std::uint32_t>(q.size());
  if (m == 0) throw InvalidParameter("skew analysis of an empty quandle");
  SkewAnalysis out;
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      if (mutually_skew(q, a, b)) {
        out.edges.emplace_back(a, b);
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  const std::uint32_t unset = m;
  out.component.assign(m, unset);
  for (std::uint32_t s = 0; s < m; ++s) {
    if (out.component[s] != unset) continue;
    const auto label = static_cast<std::uint32_t>(out.components++);
    std::deque<std::uint32_t> queue{s};
    out.component[s] = label;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (out.component[y] == unset) {
          out.component[y] = label;
          queue.push_back(y);
        }
      }
    }
  }
  out.is_skew = out.edges.size() == static_cast<std::size_t>(m) * (m - 1) / 2;
  out.is_locally_skew = out.components == 1;
  return out;
}

BraidConditions braid_conditions(const IPQuandle& q, std::uint32_t a, std::uint32_t b) {
  const auto bi = q.inv(b);
  BraidConditions c{};
  c.skew = mutually_skew(q, a, b);
  c.conjugate_back = q.act(bi, q.act(a, bi)) == a;
  c.conjugate_by_image = q.act(q.act(bi, a), bi) == a;
  c.inverses_skew = mutually_skew(q, q.inv(a), bi);
  if (c.skew) c.skew_ip_identity = q.act(q.act(b, a), q.inv(a)) == b;
  return c;
}

RightQuandle to_right_quandle(const IPQuandle& q) {
  const auto m = static_cast<std::uint32_t>(q.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(m) * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      table[a * m + b] = q.inv(q.act(q.inv(b), q.inv(a)));
    }
  }
  return RightQuandle(std::move(table), q.inversion());
}

IPQuandle to_left_quandle(const RightQuandle& q) {
  const auto m = static_cast<std::uint32_t>(q.size());
  std::vector<std::vector<std::uint32_t>> op(m, std::vector<std::uint32_t>(m));
  std::vector<std::uint32_t> inv(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    inv[a] = q.inv(a);
    for (std::uint32_t b = 0; b < m; ++b) op[a][b] = q.inv(q.act(q.inv(b), q.inv(a)));
  }
  return IPQuandle(std::move(op), std::move(inv));
}

std::optional<std::string> verify_right_ip(const RightQuandle& q) {
  const auto m = static_cast<std::uint32_t>(q.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    if (q.act(a, a) != a) return "idempotence fails at " + std::to_string(a);
    if (q.inv(q.inv(a)) != a) return "inversion is not involutive at " + std::to_string(a);
    for (std::uint32_t b = 0; b < m; ++b) {
      if (q.act(q.inv(a), b) != q.inv(q.act(a, b))) {
        return "(a^-1)^b = (a^b)^-1 fails";
      }
      if (q.act(q.act(a, b), q.inv(b)) != a) return "(a^b)^(b^-1) = a fails";
      for (std::uint32_t c = 0; c < m; ++c) {
        if (q.act(q.act(a, b), c) != q.act(q.act(a, c), q.act(b, c))) {
          return "right self-distributivity fails";
        }
      }
    }
  }
  return std::nullopt;
}

bool is_trivial_quandle(const IPQuandle& q) {
  const auto m = static_cast<std::uint32_t>(q.size());
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (q.act(a, b) != b) return false;
    }
  }
  return true;
}

}  // namespace qcover
