#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superkit/error.hpp"
#include "superkit/parity.hpp"

namespace superkit {

using SymbolId = std::uint32_t;

enum class SymbolKind : unsigned char { Coordinate, Parameter, Function };

const char* to_string(SymbolKind k);

struct SymbolInfo {
  std::string name;
  Parity parity = Parity::Even;
  SymbolKind kind = SymbolKind::Coordinate;
  /// Function symbols only: the symbols they depend on. Each argument must be
  /// an even coordinate or an even function symbol (nested dependence, e.g. a
  /// superpotential evaluated on a field). Odd dependence is expressed by
  /// explicit odd generator factors, never through arguments.
  std::vector<SymbolId> args;
};

namespace detail {
struct ContextState;
}

/// Registry of declared symbols. Declaration order fixes the total order on
/// odd atoms used by normal forms, so it must not change over the lifetime of
/// any expression built in the context. Contexts are append-only and cheap to
/// copy (shared state); two Context values are "the same context" iff they
/// share state.
class Context {
 public:
  Context();

  SymbolId declare(const std::string& name, Parity parity, SymbolKind kind,
                   const std::vector<SymbolId>& args = {});

  SymbolId coordinate(const std::string& name, Parity parity) {
    return declare(name, parity, SymbolKind::Coordinate);
  }
  SymbolId parameter(const std::string& name, Parity parity) {
    return declare(name, parity, SymbolKind::Parameter);
  }
  SymbolId function(const std::string& name, Parity parity,
                    const std::vector<SymbolId>& args) {
    return declare(name, parity, SymbolKind::Function, args);
  }

  const SymbolInfo& info(SymbolId id) const;
  std::size_t size() const;
  std::optional<SymbolId> find(const std::string& name) const;
  SymbolId require(const std::string& name) const;

  /// All symbols of kind Coordinate, in declaration order.
  std::vector<SymbolId> coordinates() const;
  bool purely_even_chart() const;

  bool same(const Context& other) const { return state_ == other.state_; }

 private:
  std::shared_ptr<detail::ContextState> state_;
  friend class SuperExpr;
};

}  // namespace superkit
