#include "siacp/frontend/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

#include "siacp/frontend/lexer.hpp"
#include "siacp/kernel/error.hpp"
#include "siacp/kernel/guarded.hpp"

namespace siacp::frontend {

namespace {

class Parser {
 public:
  Parser(std::string_view src, SystemConfig* mutable_cfg, const SystemConfig& cfg,
         const strategy::Strategy& strat, const ParseOptions& opts)
      : src_(src),
        toks_(tokenize(src)),
        mutable_cfg_(mutable_cfg),
        cfg_(cfg),
        strat_(strat),
        opts_(opts) {}

  Term parse() {
    Term t = term();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool eat(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail("expected " + describe(k) + ", found " + found());
    return take();
  }

  std::string found() const {
    return at(Tok::End) ? describe(Tok::End) : "'" + peek().text + "'";
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().where); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw SyntaxError(msg, t.where);
  }

  int number() {
    const Token& t = expect(Tok::Number);
    try {
      const int v = std::stoi(t.text);
      if (v < 1) fail_at(t, "expected a positive number");
      return v;
    } catch (const std::out_of_range&) {
      fail_at(t, "number out of range");
    }
  }

  Term term() {
    Term acc = merge();
    while (eat(Tok::Plus)) acc = Term::alt(std::move(acc), merge());
    return acc;
  }

  Term merge() {
    Term x = seq();
    const Tok k = peek().kind;
    if (k != Tok::Par && k != Tok::LeftMerge && k != Tok::Bar) return x;
    take();
    Term y = seq();
    if (at(Tok::Par) || at(Tok::LeftMerge) || at(Tok::Bar)) {
      fail("merge operators do not associate; add parentheses");
    }
    if (k == Tok::Par) return Term::par(std::move(x), std::move(y));
    if (k == Tok::LeftMerge) return Term::left_merge(std::move(x), std::move(y));
    return Term::comm_merge(std::move(x), std::move(y));
  }

  Term seq() {
    Term x = prim();
    if (eat(Tok::Dot)) return Term::seq(std::move(x), seq());
    return x;
  }

  Term prim() {
    if (eat(Tok::LParen)) {
      Term t = term();
      expect(Tok::RParen);
      return t;
    }
    if (!at(Tok::Ident)) fail("expected a term, found " + found());
    const Token& t = peek();
    if (t.text == "delta") return take(), Term::delta();
    if (t.text == "eps") return take(), Term::epsilon();
    if (t.text == "encap") return encap();
    if (t.text == "si") return interleaving(false);
    if (t.text == "pos") return interleaving(true);
    if (t.text == "rec") return rec();
    if (t.text == "init") fail_at(t, "'init' is a control state literal, not a term");
    return name(take());
  }

  Term name(const Token& t) {
    if (vars_.contains(t.text)) return Term::variable(t.text);
    if (!cfg_.declared(t.text)) {
      if (!opts_.infer_actions || !mutable_cfg_) throw UndeclaredAction(t.text);
      mutable_cfg_->declare(t.text);
    }
    return Term::action(t.text);
  }

  std::string action_name() {
    const Token& t = expect(Tok::Ident);
    if (is_keyword(t.text)) fail_at(t, "'" + t.text + "' is a keyword");
    if (!cfg_.declared(t.text)) {
      if (!opts_.infer_actions || !mutable_cfg_) throw UndeclaredAction(t.text);
      mutable_cfg_->declare(t.text);
    }
    return t.text;
  }

  Term encap() {
    take();
    expect(Tok::LBrace);
    ActionSet blocked;
    if (!at(Tok::RBrace)) {
      do {
        blocked.insert(action_name());
      } while (eat(Tok::Comma));
    }
    expect(Tok::RBrace);
    expect(Tok::LParen);
    Term x = term();
    expect(Tok::RParen);
    return Term::encap(std::move(blocked), std::move(x));
  }

  Hist history() {
    const Token& start = peek();
    std::vector<Turn> turns;
    if (at(Tok::LParen)) {
      do {
        expect(Tok::LParen);
        const int i = number();
        expect(Tok::Comma);
        const int n = number();
        expect(Tok::RParen);
        turns.push_back({i, n});
      } while (eat(Tok::Comma));
    }
    if (!hist_is_wellformed(turns)) fail_at(start, "malformed interleaving history");
    return Hist::from(std::move(turns));
  }

  // Raw text up to the ']' closing the bracket group, handed to the strategy.
  ControlState state() {
    const Token& start = peek();
    int depth = 0;
    while (!at(Tok::End)) {
      if (at(Tok::LBracket) || at(Tok::LBrace)) ++depth;
      if (at(Tok::RBracket) || at(Tok::RBrace)) {
        if (depth == 0) break;
        --depth;
      }
      take();
    }
    if (!at(Tok::RBracket)) fail("unterminated control state literal");
    const std::string_view text = src_.substr(start.offset, peek().offset - start.offset);
    try {
      return strat_.parse_state(trim(text));
    } catch (const std::invalid_argument& e) {
      fail_at(start, e.what());
    }
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  Term interleaving(bool positional) {
    const Token& head = take();
    expect(Tok::LBracket);
    const int n = number();
    expect(Tok::Semi);
    int i = 0;
    if (positional) {
      i = number();
      expect(Tok::Semi);
    }
    Hist h = history();
    expect(Tok::Semi);
    ControlState s = state();
    expect(Tok::RBracket);
    expect(Tok::LParen);
    std::vector<Term> args;
    do {
      args.push_back(term());
    } while (eat(Tok::Comma));
    expect(Tok::RParen);
    if (static_cast<int>(args.size()) != n) {
      fail_at(head, "declared arity " + std::to_string(n) + " but " +
                        std::to_string(args.size()) + " arguments given");
    }
    if (positional) {
      if (i > n) fail_at(head, "position " + std::to_string(i) + " exceeds arity");
      return Term::pos_si(i, std::move(h), std::move(s), std::move(args));
    }
    return Term::si(std::move(h), std::move(s), std::move(args));
  }

  Term rec() {
    const Token& head = take();
    if (at(Tok::Ident)) take();  // optional leading variable, informational only
    expect(Tok::LBrace);

    // Left-hand sides first, so bodies can refer to any of them.
    std::set<std::string> lhs;
    {
      int depth = 0;
      Tok prev = Tok::Semi;
      for (std::size_t k = pos_; toks_[k].kind != Tok::End; ++k) {
        const Tok kind = toks_[k].kind;
        const bool opens = kind == Tok::LBrace || kind == Tok::LParen || kind == Tok::LBracket;
        const bool closes = kind == Tok::RBrace || kind == Tok::RParen || kind == Tok::RBracket;
        if (closes && depth == 0) break;
        if (depth == 0 && prev == Tok::Semi && kind == Tok::Ident &&
            toks_[k + 1].kind == Tok::Equals) {
          lhs.insert(toks_[k].text);
        }
        if (opens) ++depth;
        if (closes) --depth;
        prev = kind;
      }
    }

    // Variables of an enclosing block are not visible in a nested one.
    auto saved = std::exchange(vars_, lhs);
    std::map<std::string, Term> eqs;
    do {
      if (at(Tok::RBrace)) break;
      const Token& v = expect(Tok::Ident);
      if (is_keyword(v.text)) fail_at(v, "'" + v.text + "' is a keyword");
      expect(Tok::Equals);
      Term body = term();
      if (!eqs.emplace(v.text, std::move(body)).second) {
        fail_at(v, "variable " + v.text + " defined twice");
      }
    } while (eat(Tok::Semi));
    expect(Tok::RBrace);
    vars_ = std::move(saved);
    if (eqs.empty()) fail_at(head, "empty recursive specification");

    const Token& sel = expect(Tok::Ident);
    if (!eqs.contains(sel.text)) fail_at(sel, "variable " + sel.text + " is not defined here");

    auto spec = std::make_shared<const RecSpec>(std::move(eqs));
    const auto report = check_guarded(*spec, opts_.guard_budget, &cfg_.comm);
    for (const auto& e : report.equations) {
      if (e.verdict == Guardedness::NotShownGuarded) throw UnguardedRecursion(e.var);
    }
    return Term::rec(sel.text, std::move(spec));
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SystemConfig* mutable_cfg_;
  const SystemConfig& cfg_;
  const strategy::Strategy& strat_;
  const ParseOptions& opts_;
  std::set<std::string> vars_;
};

}  // namespace

Term parse_term(std::string_view src, const SystemConfig& cfg, const strategy::Strategy& strat) {
  const ParseOptions opts;
  return Parser(src, nullptr, cfg, strat, opts).parse();
}

Term parse_term(std::string_view src, SystemConfig& cfg, const strategy::Strategy& strat,
                const ParseOptions& opts) {
  return Parser(src, &cfg, cfg, strat, opts).parse();
}

}  // namespace siacp::frontend
