#include "nlgraph/ident.hpp"

#include <cctype>

namespace nlgraph {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::strong_ordering natural_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      // Strip leading zeros, then a longer run is a larger number.
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return (ie - is) <=> (je - js);
      for (std::size_t k = 0; k < ie - is; ++k) {
        if (a[is + k] != b[js + k]) return a[is + k] <=> b[js + k];
      }
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) {
      return static_cast<unsigned char>(a[i]) <=> static_cast<unsigned char>(b[j]);
    }
    ++i;
    ++j;
  }
  if (i < a.size() || j < b.size()) return (a.size() - i) <=> (b.size() - j);
  return a.compare(b) <=> 0;
}

bool is_plain_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

DartId forward_dart(std::string_view edge_name) { return DartId(std::string(edge_name)); }

DartId backward_dart(std::string_view edge_name) {
  return DartId(kReverseMarker + std::string(edge_name));
}

DartId conventional_reverse(const DartId& d) {
  if (!d.value.empty() && d.value.front() == kReverseMarker) return DartId(d.value.substr(1));
  return DartId(kReverseMarker + d.value);
}

}  // namespace nlgraph
