#include "superkit/context.hpp"

#include <map>

namespace superkit {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateName: return "duplicate-name";
    case ErrorCode::InvalidDeclaration: return "invalid-declaration";
    case ErrorCode::ContextMismatch: return "context-mismatch";
    case ErrorCode::ParityViolation: return "parity-violation";
    case ErrorCode::InvalidTarget: return "invalid-target";
    case ErrorCode::InvalidMeasure: return "invalid-measure";
    case ErrorCode::UnsupportedArgument: return "unsupported-argument";
    case ErrorCode::NonInvertible: return "non-invertible";
    case ErrorCode::SingularBlock: return "singular-block";
    case ErrorCode::ParityUndetermined: return "parity-undetermined";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::UnsupportedChart: return "unsupported-chart";
    case ErrorCode::DegenerateDistribution: return "degenerate-distribution";
    case ErrorCode::NotAuxiliary: return "not-auxiliary";
    case ErrorCode::CbhOrderUnsupported: return "cbh-order-unsupported";
    case ErrorCode::BracketVerificationFailure: return "bracket-verification-failure";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::RepresentationIncompatible: return "representation-incompatible";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::SemanticError: return "semantic-error";
    case ErrorCode::UnknownSuite: return "unknown-suite";
    case ErrorCode::IoError: return "io-error";
    case ErrorCode::Internal: return "internal-error";
  }
  return "?";
}

const char* to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::Coordinate: return "coordinate";
    case SymbolKind::Parameter: return "parameter";
    case SymbolKind::Function: return "function";
  }
  return "?";
}

namespace detail {
struct ContextState {
  std::vector<SymbolInfo> symbols;
  std::map<std::string, SymbolId> by_name;
};
}  // namespace detail

Context::Context() : state_(std::make_shared<detail::ContextState>()) {}

SymbolId Context::declare(const std::string& name, Parity parity,
                          SymbolKind kind, const std::vector<SymbolId>& args) {
  if (name.empty()) fail(ErrorCode::InvalidDeclaration, "empty symbol name");
  if (state_->by_name.count(name))
    fail(ErrorCode::DuplicateName, "symbol '" + name + "' already declared");
  if (kind == SymbolKind::Function) {
    for (SymbolId a : args) {
      if (a >= state_->symbols.size())
        fail(ErrorCode::InvalidDeclaration,
             "function '" + name + "' references an undeclared argument");
      const SymbolInfo& ai = state_->symbols[a];
      if (ai.parity != Parity::Even)
        fail(ErrorCode::InvalidDeclaration,
             "function '" + name + "' has odd argument '" + ai.name +
                 "' (unsupported)");
      if (ai.kind == SymbolKind::Parameter)
        fail(ErrorCode::InvalidDeclaration,
             "function '" + name + "' may not depend on parameter '" +
                 ai.name + "'");
    }
  } else if (!args.empty()) {
    fail(ErrorCode::InvalidDeclaration,
         "only function symbols take arguments");
  }
  SymbolId id = static_cast<SymbolId>(state_->symbols.size());
  state_->symbols.push_back(SymbolInfo{name, parity, kind, args});
  state_->by_name.emplace(name, id);
  return id;
}

const SymbolInfo& Context::info(SymbolId id) const {
  if (id >= state_->symbols.size())
    fail(ErrorCode::Internal, "symbol id out of range");
  return state_->symbols[id];
}

std::size_t Context::size() const { return state_->symbols.size(); }

std::optional<SymbolId> Context::find(const std::string& name) const {
  auto it = state_->by_name.find(name);
  if (it == state_->by_name.end()) return std::nullopt;
  return it->second;
}

SymbolId Context::require(const std::string& name) const {
  auto id = find(name);
  if (!id) fail(ErrorCode::SemanticError, "undeclared symbol '" + name + "'");
  return *id;
}

std::vector<SymbolId> Context::coordinates() const {
  std::vector<SymbolId> out;
  for (SymbolId i = 0; i < state_->symbols.size(); ++i)
    if (state_->symbols[i].kind == SymbolKind::Coordinate) out.push_back(i);
  return out;
}

bool Context::purely_even_chart() const {
  for (const auto& s : state_->symbols)
    if (s.kind == SymbolKind::Coordinate && s.parity == Parity::Odd)
      return false;
  return true;
}

}  // namespace superkit
