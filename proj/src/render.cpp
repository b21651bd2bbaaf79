#include "bcpp/render.hpp"

#include <sstream>

namespace bcpp {

namespace {
constexpr int kBands = 10;
}

std::string render_ascii(const Instance& instance, const SequencePacking& p) {
  const CellPacking cells = to_cell_packing(p);
  const int length = packing_length(p);
  const int cap = instance.denominator();
  std::vector<int> load(length + 2, 0);
  for (int i = 0; i < instance.size(); ++i) {
    load[cells.positions[i]] += instance[i].a.units;
    load[cells.positions[i] + 1] += instance[i].b.units;
  }
  std::ostringstream out;
  for (int band = kBands; band >= 1; --band) {
    out << '|';
    for (int c = 1; c <= length; ++c) {
      const int filled = (load[c] * kBands + cap - 1) / cap;
      out << (filled >= band ? '#' : ' ');
    }
    out << "|\n";
  }
  out << '+' << std::string(length, '-') << "+\n";
  out << "length " << length << '\n';
  return out.str();
}

std::string render_svg(const Instance& instance, const SequencePacking& p) {
  const CellPacking cells = to_cell_packing(p);
  const int length = packing_length(p);
  const int d = instance.denominator();
  std::vector<int> stacked(length + 2, 0);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << static_cast<long long>(length) * d << ' ' << d
      << "\" preserveAspectRatio=\"none\" width=\"" << 40 * length
      << "\" height=\"40\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << static_cast<long long>(length) * d
      << "\" height=\"" << d << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const int chart : p.order) {
    const int pos = cells.positions[chart];
    const int bars[2] = {instance[chart].a.units, instance[chart].b.units};
    for (int side = 0; side < 2; ++side) {
      const int cell = pos + side;
      const int h = bars[side];
      out << "<rect x=\"" << static_cast<long long>(cell - 1) * d
          << "\" y=\"" << d - stacked[cell] - h << "\" width=\"" << d
          << "\" height=\"" << h << "\" data-chart=\"" << chart
          << "\" fill=\"hsl(" << (chart * 47) % 360
          << ",60%,60%)\" stroke=\"black\"/>\n";
      stacked[cell] += h;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bcpp
