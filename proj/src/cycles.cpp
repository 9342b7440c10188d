#include "plumb/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace plumb {

namespace {

using Framings = std::vector<std::int64_t>;

// Inserts a 1 on edge (i, i+1) and increments both ends; a single vertex is
// its own neighbour on both sides.
Framings insert_blowup(const Framings& e, std::size_t edge) {
  const std::size_t n = e.size();
  if (n == 1) return {add_checked(e[0], 2), 1};
  Framings out(e);
  const std::size_t next = (edge + 1) % n;
  out[edge] = add_checked(out[edge], 1);
  out[next] = add_checked(out[next], 1);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(edge + 1), 1);
  return out;
}

// Removes entry i and adds delta to each of its two neighbours.
Framings contract(const Framings& e, std::size_t i, std::int64_t delta) {
  const std::size_t n = e.size();
  Framings out;
  out.reserve(n - 1);
  if (n == 2) {
    out.push_back(add_checked(e[1 - i], 2 * delta));
    return out;
  }
  const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    std::int64_t v = e[j];
    if (j == prev) v = add_checked(v, delta);
    if (j == next) v = add_checked(v, delta);
    out.push_back(v);
  }
  return out;
}

std::int64_t deficit(const Framings& e) {
  std::int64_t d = 0;
  for (auto x : e)
    if (x < 2) d = add_checked(d, 2 - x);
  return d;
}

bool all_at_least_two(const Framings& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x >= 2; });
}

void require_reduced_cycle(std::span<const std::int64_t> a) {
  if (a.empty()) fail(ErrorKind::usage, "empty cycle");
  for (auto x : a)
    if (x < 2) fail(ErrorKind::not_reduced, "not a reduced cycle: entry " + std::to_string(x) + " < 2");
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "plus") return Sign::plus;
  if (text == "-" || text == "minus") return Sign::minus;
  fail(ErrorKind::usage, "sign must be + or -, got '" + text + "'");
}

CyclicChain::CyclicChain(std::vector<std::int64_t> framings, Sign sign)
    : framings_(std::move(framings)), sign_(sign) {
  if (framings_.empty()) fail(ErrorKind::usage, "cyclic chain needs at least one entry");
}

std::int64_t CyclicChain::sum() const {
  std::int64_t s = 0;
  for (auto x : framings_) s = add_checked(s, x);
  return s;
}

std::vector<std::int64_t> canonical_framings(std::span<const std::int64_t> framings) {
  const std::size_t n = framings.size();
  Framings best(framings.begin(), framings.end());
  Framings cand(n);
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t off = 0; off < n; ++off) {
      for (std::size_t i = 0; i < n; ++i)
        cand[i] = refl ? framings[(off + n - i) % n] : framings[(off + i) % n];
      if (cand < best) best = cand;
    }
  }
  return best;
}

CyclicChain CyclicChain::canonical() const {
  return CyclicChain(canonical_framings(framings_), sign_);
}

std::string CyclicChain::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < framings_.size(); ++i) os << (i ? "," : "") << framings_[i];
  os << ')' << plumb::to_string(sign_);
  return os.str();
}

CyclicChain CyclicChain::parse(const std::string& text) {
  std::string body = text;
  Sign sign = Sign::plus;
  if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
    sign = body.back() == '+' ? Sign::plus : Sign::minus;
    body.pop_back();
  }
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  Framings out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      fail(ErrorKind::usage, "cannot parse chain '" + text + "'");
    }
  }
  return CyclicChain(std::move(out), sign);
}

bool operator==(const CyclicChain& x, const CyclicChain& y) {
  return x.sign_ == y.sign_ && canonical_framings(x.framings_) == canonical_framings(y.framings_);
}

bool operator<(const CyclicChain& x, const CyclicChain& y) {
  return std::tuple(canonical_framings(x.framings_), x.sign_) <
         std::tuple(canonical_framings(y.framings_), y.sign_);
}

IntMat2 framing_product(std::span<const std::int64_t> framings) {
  IntMat2 m;
  for (auto x : framings) m = m * IntMat2{x, 1, -1, 0};
  return m;
}

Monodromy monodromy(const CyclicChain& chain) {
  require_reduced_cycle(chain.framings());
  const IntConvergents c = int_convergents(chain.framings());
  Monodromy out;
  out.B = {c.p, c.q, -c.p_prev, -c.q_prev};
  const std::int64_t tr = out.B.trace();
  out.cls = {chain.sign() == Sign::plus ? tr : -tr, out.B.det(), chain.sign()};
  return out;
}

bool is_hyperbolic(const MonodromyClass& cls) { return std::llabs(cls.trace) > 2; }

CyclicChain blow_up(const CyclicChain& chain, std::size_t edge, BlowupStyle style) {
  if (style == BlowupStyle::leaf) fail(ErrorKind::unsupported, "leaf blowups do not apply to a cycle");
  if (edge >= chain.size())
    fail(ErrorKind::usage, "edge index " + std::to_string(edge) + " out of range");
  return CyclicChain(insert_blowup(chain.framings(), edge), chain.sign());
}

CyclicChain blow_down(const CyclicChain& chain, std::size_t entry) {
  if (entry >= chain.size())
    fail(ErrorKind::usage, "entry index " + std::to_string(entry) + " out of range");
  if (chain.framings()[entry] != 1)
    fail(ErrorKind::not_blowdown_candidate,
         "not a blowdown candidate: entry " + std::to_string(entry) + " is " +
             std::to_string(chain.framings()[entry]));
  if (chain.size() < 3) fail(ErrorKind::irreducible, "irreducible: chain has fewer than 3 entries");
  return CyclicChain(contract(chain.framings(), entry, -1), chain.sign());
}

SearchLimits SearchLimits::from_env() {
  SearchLimits limits;
  if (const char* env = std::getenv("PLUMBING_CENSUS_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_states = static_cast<std::size_t>(v);
  }
  return limits;
}

CyclicChain dual_cycle(const CyclicChain& chain, const SearchLimits& limits) {
  const Framings& a = chain.framings();
  require_reduced_cycle(a);
  if (std::none_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 3; }))
    fail(ErrorKind::usage, "dual cycle needs an entry >= 3");

  // Work with the actual framings -a_i: blow up +1-framed unknots on edges
  // touching a small framing and blow down every -1-framed unknot, until all
  // framings are >= 2. Best-first on the total deficit below 2.
  Framings start(a.size());
  std::transform(a.begin(), a.end(), start.begin(), [](std::int64_t x) { return -x; });

  using Key = std::tuple<std::int64_t, std::size_t, Framings>;
  std::set<Key> frontier;
  std::set<Framings> seen;
  auto push = [&](const Framings& e) {
    Framings canon = canonical_framings(e);
    if (!seen.insert(canon).second) return;
    frontier.emplace(deficit(canon), canon.size(), std::move(canon));
  };
  push(start);

  std::size_t expanded = 0;
  while (!frontier.empty()) {
    auto node = frontier.extract(frontier.begin());
    const Framings& e = std::get<2>(node.value());
    if (all_at_least_two(e)) {
      CyclicChain dual(e, chain.sign());
      const std::int64_t before = framing_product(a).trace();
      const std::int64_t after = framing_product(e).trace();
      if (std::llabs(before) != std::llabs(after))
        fail(ErrorKind::bound_exceeded, "rewriting lost the monodromy trace");
      return dual;
    }
    if (++expanded > limits.max_states)
      fail(ErrorKind::bound_exceeded,
           "bound exceeded: dual search expanded " + std::to_string(limits.max_states) + " states");
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] == -1 && n >= 2) push(contract(e, i, +1));
    for (std::size_t i = 0; i < n; ++i)
      if (std::min(e[i], e[(i + 1) % n]) <= 1) push(insert_blowup(e, i));
  }
  fail(ErrorKind::bound_exceeded, "bound exceeded: not chain-representable within the move set");
}

std::vector<BlowupRecord> enumerate_blowups(std::int64_t k, const SearchLimits& limits) {
  if (k < 0) fail(ErrorKind::usage, "blowup count must be non-negative");
  if (k > limits.max_blowup_depth)
    fail(ErrorKind::bound_exceeded, "bound exceeded: blowup depth " + std::to_string(k) + " > " +
                                        std::to_string(limits.max_blowup_depth));
  std::map<Framings, BlowupRecord> level;
  level.emplace(Framings{0, 0}, BlowupRecord{{0, 0}, {}});
  for (std::int64_t step = 0; step < k; ++step) {
    std::map<Framings, BlowupRecord> next;
    for (const auto& [canon, rec] : level) {
      for (std::size_t edge = 0; edge < rec.framings.size(); ++edge) {
        BlowupRecord child{insert_blowup(rec.framings, edge), rec.moves};
        child.moves.push_back(edge);
        Framings key = canonical_framings(child.framings);
        next.try_emplace(std::move(key), std::move(child));
      }
    }
    if (next.size() > limits.max_states) fail(ErrorKind::bound_exceeded, "bound exceeded: too many blowups");
    level = std::move(next);
  }
  std::vector<BlowupRecord> out;
  out.reserve(level.size());
  for (auto& [canon, rec] : level) out.push_back(std::move(rec));
  return out;
}

std::vector<std::int64_t> replay_blowups(std::span<const std::size_t> moves) {
  Framings e{0, 0};
  for (auto edge : moves) {
    if (edge >= e.size()) fail(ErrorKind::usage, "replayed edge index out of range");
    e = insert_blowup(e, edge);
  }
  return e;
}

std::vector<std::int64_t> EmbeddingWitness::aligned() const {
  const auto& c = blowup.framings;
  const std::size_t n = c.size();
  Framings out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = reflected ? c[(offset + n - i) % n] : c[(offset + i) % n];
  return out;
}

std::string EmbeddingWitness::to_string() const {
  std::ostringstream os;
  os << "moves=[";
  for (std::size_t i = 0; i < blowup.moves.size(); ++i) os << (i ? "," : "") << blowup.moves[i];
  os << "] c=" << CyclicChain(blowup.framings).to_string() << " offset=" << offset
     << " reflected=" << (reflected ? "true" : "false");
  return os.str();
}

std::string to_string(EmbedVerdict v) {
  switch (v) {
    case EmbedVerdict::embeddable: return "embeddable";
    case EmbedVerdict::not_embeddable: return "not_embeddable";
    case EmbedVerdict::bound_exceeded: return "bound_exceeded";
  }
  return "?";
}

bool verify_witness(const EmbeddingWitness& w, std::span<const std::int64_t> d) {
  if (replay_blowups(w.blowup.moves) != w.blowup.framings) return false;
  if (w.blowup.framings.size() != d.size()) return false;
  const Framings c = w.aligned();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (c[i] > d[i]) return false;
  return true;
}

EmbeddabilityResult embeddable_dual(std::span<const std::int64_t> d, std::int64_t max_k) {
  EmbeddabilityResult res;
  res.dual.assign(d.begin(), d.end());
  const std::size_t n = d.size();
  if (n < 2) {
    res.verdict = EmbedVerdict::not_embeddable;
    res.reason = "no blowup of (0,0) has fewer than 2 entries";
    return res;
  }
  const std::int64_t k = static_cast<std::int64_t>(n) - 2;
  std::int64_t total = 0;
  for (auto x : d) total = add_checked(total, x);
  if (total < 3 * k) {
    res.verdict = EmbedVerdict::not_embeddable;
    res.reason = "pruned: entry sum " + std::to_string(total) + " < " + std::to_string(3 * k);
    return res;
  }
  if (k > max_k) {
    res.verdict = EmbedVerdict::bound_exceeded;
    res.reason = "not embeddable within bound: needs " + std::to_string(k) + " blowups, max-k is " +
                 std::to_string(max_k);
    return res;
  }
  SearchLimits limits = SearchLimits::from_env();
  limits.max_blowup_depth = std::max(limits.max_blowup_depth, max_k);
  for (auto& rec : enumerate_blowups(k, limits)) {
    for (int refl = 0; refl < 2; ++refl) {
      for (std::size_t off = 0; off < n; ++off) {
        EmbeddingWitness w{rec, off, refl == 1};
        const Framings c = w.aligned();
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) fits = c[i] <= d[i];
        if (fits) {
          res.verdict = EmbedVerdict::embeddable;
          res.witness = std::move(w);
          return res;
        }
      }
    }
  }
  res.verdict = EmbedVerdict::not_embeddable;
  res.reason = "no blowup of (0,0) with " + std::to_string(n) + " entries fits under d";
  return res;
}

EmbeddabilityResult is_embeddable(std::span<const std::int64_t> a, std::int64_t max_k,
                                  const SearchLimits& limits) {
  CyclicChain d = dual_cycle(CyclicChain(Framings(a.begin(), a.end())), limits);
  return embeddable_dual(d.framings(), max_k);
}

}  // namespace plumb
