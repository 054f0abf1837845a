#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace nlgraph {

/// Total order on identifier strings in which embedded digit runs compare
/// numerically ("v2" < "v10"). Ties between numerically equal runs such as
/// "01" and "1" fall back to plain byte order, so the order stays total.
std::strong_ordering natural_compare(std::string_view a, std::string_view b);

/// True iff `s` is a nonempty string over [A-Za-z0-9_].
bool is_plain_identifier(std::string_view s);

template <class Tag>
struct Ident {
  std::string value;

  Ident() = default;
  explicit Ident(std::string v) : value(std::move(v)) {}
  explicit Ident(const char* v) : value(v) {}

  friend std::strong_ordering operator<=>(const Ident& a, const Ident& b) {
    return natural_compare(a.value, b.value);
  }
  friend bool operator==(const Ident& a, const Ident& b) { return a.value == b.value; }

  friend std::ostream& operator<<(std::ostream& os, const Ident& id) { return os << id.value; }
};

struct VertexTag {};
struct DartTag {};

using VertexId = Ident<VertexTag>;
using DartId = Ident<DartTag>;

/// An edge named `x` in the text formats is the dart pair {x, ~x}; dart `x`
/// leaves the first declared endpoint.
inline constexpr char kReverseMarker = '~';

DartId forward_dart(std::string_view edge_name);
DartId backward_dart(std::string_view edge_name);

/// Dart name with the reverse marker toggled: "x" <-> "~x".
DartId conventional_reverse(const DartId& d);

}  // namespace nlgraph

template <class Tag>
struct std::hash<nlgraph::Ident<Tag>> {
  std::size_t operator()(const nlgraph::Ident<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};
