#include "siacp/strategy/semaphore.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "siacp/kernel/sequence.hpp"

namespace siacp::strategy {

std::size_t QueueState::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (const auto& [r, q] : queues_) {
    mix(std::hash<std::string>{}(r));
    mix(q.size());
    for (int i : q) mix(static_cast<std::size_t>(i));
  }
  return h;
}

std::strong_ordering QueueState::compare_same(const ControlStateValue& other) const {
  const auto& o = static_cast<const QueueState&>(other).queues_;
  return queues_ <=> o;
}

std::string QueueState::render() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [r, q] : queues_) {
    if (!first) out += ",";
    first = false;
    out += r + ":[";
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(q[k]);
    }
    out += "]";
  }
  return out + "}";
}

ControlState make_queue_state(Queues queues) {
  return ControlState(std::make_shared<const QueueState>(std::move(queues)));
}

const Queues& queues_of(const ControlState& s) {
  const auto* q = s.as<QueueState>();
  if (!q) throw std::invalid_argument("not a semaphore control state: " + s.render());
  return q->queues();
}

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view src) : src_(src) {}

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a semaphore name");
    return std::string(src_.substr(start, pos_ - start));
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a process index");
    const int v = std::stoi(std::string(src_.substr(start, pos_ - start)));
    if (v < 1) fail("process indices start at 1");
    return v;
  }
  bool done() {
    skip();
    return pos_ == src_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("semaphore state '" + std::string(src_) + "': " + msg +
                                " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Queues parse_queues(std::string_view literal) {
  LiteralReader in(literal);
  Queues out;
  in.expect('{');
  if (!in.eat('}')) {
    do {
      std::string r = in.ident();
      in.expect(':');
      in.expect('[');
      std::vector<int> q;
      if (!in.eat(']')) {
        do {
          q.push_back(in.number());
        } while (in.eat(','));
        in.expect(']');
      }
      if (!out.emplace(r, std::move(q)).second) in.fail("duplicate semaphore " + r);
    } while (in.eat(','));
    in.expect('}');
  }
  if (!in.done()) in.fail("trailing input");
  return out;
}

std::string p_action(const std::string& semaphore) { return "P_" + semaphore; }
std::string v_action(const std::string& semaphore) { return "V_" + semaphore; }

int sem_turns(const Hist& h, int i) {
  int count = 0;
  const auto turns = h.turns();
  for (auto it = turns.rbegin(); it != turns.rend() && it->process == i; ++it) ++count;
  return count;
}

int sem_next(int n, const Hist& h, int i, int k, TurnsConvention conv) {
  // i + 1 when i < n; the rotation keeps larger skip counters in range.
  if (h.empty()) return i % n + 1;
  const int j = h.back().process;
  const int t = conv == TurnsConvention::AsWritten ? sem_turns(h.prefix(), j) : sem_turns(h, j);
  // Right after a termination j may be n + 1, which is no candidate.
  if (t < k && j <= n) return j;
  return (i + j) % n + 1;
}

std::set<int> sem_waiting(const Queues& s) {
  std::set<int> out;
  for (const auto& [r, q] : s) {
    const auto e = seq::elems(q);
    out.insert(e.begin(), e.end());
  }
  return out;
}

std::optional<int> sem_sched(int n, const Hist& h, const Queues& s, int k, TurnsConvention conv) {
  const auto waiting = sem_waiting(s);
  for (int i = 0; i < k * n; ++i) {
    const int c = sem_next(n, h, i, k, conv);
    if (!waiting.contains(c)) return c;
  }
  return std::nullopt;
}

std::vector<int> sem_remove_prime(int, const std::vector<int>& q, int i) {
  std::vector<int> out;
  for (int j : q) {
    if (j < i) {
      out.push_back(j);
    } else if (j > i) {
      out.push_back(j - 1);
    }
  }
  return out;
}

Queues sem_remove(int n, const Queues& s, int i) {
  Queues out;
  for (const auto& [r, q] : s) {
    out = fmap::override_with(std::move(out), fmap::maplet(r, sem_remove_prime(n, q, i)));
  }
  return out;
}

Queues sem_updat(int n, const Hist& h, const Queues& s, int i, const SemStep& alpha) {
  using K = SemStep::Kind;
  const std::string& r = alpha.semaphore;
  switch (alpha.kind) {
    case K::Epsilon:
    case K::Delta:
      return sem_remove(n, s, i);
    case K::Other:
      return h.empty() ? Queues{} : s;
    case K::P:
      if (h.empty()) return fmap::maplet(r, std::vector<int>{});
      if (!s.contains(r)) return fmap::override_with(s, fmap::maplet(r, std::vector<int>{}));
      return fmap::override_with(s, fmap::maplet(r, seq::concat(s.at(r), {i})));
    case K::V:
      if (h.empty()) return {};
      if (!s.contains(r)) return s;
      if (s.at(r).empty()) return fmap::domain_subtract(s, std::set<std::string>{r});
      return fmap::override_with(s, fmap::maplet(r, seq::tl(s.at(r))));
  }
  return s;
}

SemaphoreStrategy::SemaphoreStrategy(int k, std::set<std::string> semaphores, TurnsConvention conv)
    : k_(k), semaphores_(std::move(semaphores)), conv_(conv) {
  if (k_ < 1) throw std::invalid_argument("k must be positive");
  if (semaphores_.empty()) throw std::invalid_argument("semaphore set must be nonempty");
  for (const auto& r : semaphores_) {
    control_.insert(p_action(r));
    control_.insert(v_action(r));
    by_action_.emplace(p_action(r), SemStep::p(r));
    by_action_.emplace(v_action(r), SemStep::v(r));
  }
}

SemStep SemaphoreStrategy::classify(const StepLabel& alpha) const {
  switch (alpha.kind) {
    case StepLabel::Kind::Epsilon: return SemStep::eps();
    case StepLabel::Kind::Delta: return SemStep::dead();
    case StepLabel::Kind::Action: {
      auto it = by_action_.find(alpha.action);
      return it == by_action_.end() ? SemStep::other() : it->second;
    }
  }
  return SemStep::other();
}

std::optional<int> SemaphoreStrategy::sched(int n, const Hist& h, const ControlState& s) const {
  return sem_sched(n, h, queues_of(s), k_, conv_);
}

ControlState SemaphoreStrategy::updat(int n, const Hist& h, const ControlState& s, int i,
                                      const StepLabel& alpha) const {
  return make_queue_state(sem_updat(n, h, queues_of(s), i, classify(alpha)));
}

ControlState SemaphoreStrategy::initial_state() const { return make_queue_state({}); }

Hist SemaphoreStrategy::digest(const Hist& h) const {
  if (h.empty()) return h;
  const Turn last = h.back();
  const int t = std::min(sem_turns(h.prefix(), last.process), k_);
  // Filler pairs use a count that keeps the representative well-formed.
  const Turn filler{last.process, std::max(last.process, last.count)};
  std::vector<Turn> rep(static_cast<std::size_t>(t), filler);
  rep.push_back(last);
  // j = m + 1 cannot open a history; lead with a turn of process 1, which
  // differs from j and so leaves turns(prefix, j) at zero.
  if (t == 0 && last.process > last.count) rep.insert(rep.begin(), Turn{1, last.count + 1});
  return Hist::from(std::move(rep));
}

ControlState SemaphoreStrategy::parse_state(std::string_view literal) const {
  if (literal == "init") return initial_state();
  return make_queue_state(parse_queues(literal));
}

StrategyPtr sem_strategy(int k, std::set<std::string> semaphores, TurnsConvention conv) {
  return std::make_shared<const SemaphoreStrategy>(k, std::move(semaphores), conv);
}

void declare_semaphores(SystemConfig& cfg, const std::set<std::string>& semaphores) {
  for (const auto& r : semaphores) {
    for (const std::string& c : {p_action(r), v_action(r)}) {
      const ActionClass* existing = cfg.classify(c);
      if (existing && existing->kind != ActionKind::Control) {
        throw std::invalid_argument("semaphore action '" + c +
                                    "' collides with a declared non-control action");
      }
      cfg.declare_control(c);
    }
  }
}

std::string to_string(TurnsConvention conv) {
  return conv == TurnsConvention::AsWritten ? "as-written" : "prose";
}

}  // namespace siacp::strategy
