#include "siacp/frontend/render.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace siacp::frontend {

namespace {

// Binding strength: sum < merge < sequence < primary.
constexpr int kSum = 0;
constexpr int kMerge = 1;
constexpr int kSeq = 2;
constexpr int kPrim = 3;

void render(const Term& t, int context, std::string& out);

void wrap(int own, int context, std::string& out, auto&& body) {
  const bool parens = own < context;
  if (parens) out += '(';
  body();
  if (parens) out += ')';
}

void render_args(std::span<const Term> args, std::string& out) {
  out += '(';
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ", ";
    render(args[k], kSum, out);
  }
  out += ')';
}

void render(const Term& t, int context, std::string& out) {
  switch (t.kind()) {
    case TermKind::Delta:
      out += "delta";
      return;
    case TermKind::Epsilon:
      out += "eps";
      return;
    case TermKind::Action:
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Alt:
      wrap(kSum, context, out, [&] {
        render(t.lhs(), kSum, out);
        out += " + ";
        render(t.rhs(), kMerge, out);
      });
      return;
    case TermKind::Par:
    case TermKind::LeftMerge:
    case TermKind::CommMerge: {
      const char* op = t.is(TermKind::Par) ? " || " : (t.is(TermKind::LeftMerge) ? " |_ " : " | ");
      wrap(kMerge, context, out, [&] {
        render(t.lhs(), kSeq, out);
        out += op;
        render(t.rhs(), kSeq, out);
      });
      return;
    }
    case TermKind::Seq:
      wrap(kSeq, context, out, [&] {
        render(t.lhs(), kPrim, out);
        out += " . ";
        render(t.rhs(), kSeq, out);
      });
      return;
    case TermKind::Encap: {
      out += "encap{";
      bool first = true;
      for (const auto& a : t.blocked()) {
        if (!first) out += ",";
        first = false;
        out += a;
      }
      out += "}(";
      render(t.operand(), kSum, out);
      out += ')';
      return;
    }
    case TermKind::Si:
    case TermKind::PosSi:
      out += t.is(TermKind::Si) ? "si[" : "pos[";
      out += std::to_string(t.arity()) + "; ";
      if (t.is(TermKind::PosSi)) out += std::to_string(t.position()) + "; ";
      out += render_history(t.history());
      out += "; ";
      out += t.state().render();
      out += ']';
      render_args(t.args(), out);
      return;
    case TermKind::RecConst: {
      out += "rec " + t.name() + " { ";
      bool first = true;
      for (const auto& [x, body] : t.spec().equations()) {
        if (!first) out += "; ";
        first = false;
        out += x + " = ";
        render(body, kSum, out);
      }
      out += " } " + t.name();
      return;
    }
  }
}

}  // namespace

std::string render_term(const Term& t) {
  std::string out;
  render(t, kSum, out);
  return out;
}

std::string render_history(const Hist& h) {
  std::string out;
  for (const Turn& p : h.turns()) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(p.process) + "," + std::to_string(p.count) + ")";
  }
  return out;
}

std::string render_equations(const RecSpec& spec, const std::string& root) {
  std::vector<std::string> order;
  for (const auto& [x, body] : spec.equations()) {
    if (x != root) order.push_back(x);
  }
  std::sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (spec.defines(root)) order.insert(order.begin(), root);
  std::string out;
  for (const auto& x : order) out += x + " = " + render_term(spec.body(x)) + "\n";
  return out;
}

}  // namespace siacp::frontend
