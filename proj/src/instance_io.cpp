#include "bcpp/instance_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bcpp/errors.hpp"

namespace bcpp {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line; throws at end of input.
  std::string next(const char* expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    throw InvalidInput(std::string("unexpected end of file, expecting ") +
                       expecting);
  }

  bool at_end() {
    std::string line;
    while (in_.peek() != std::char_traits<char>::eof()) {
      const auto pos = in_.tellg();
      std::getline(in_, line);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      in_.clear();
      in_.seekg(pos);
      return false;
    }
    return true;
  }

  // "key value..." -> value part; throws if the key differs.
  std::string keyed(const std::string& key) {
    const std::string line = next(key.c_str());
    if (line == key) return {};
    if (line.rfind(key + " ", 0) != 0) fail("expected '" + key + "'");
    return line.substr(key.size() + 1);
  }

  long long keyed_int(const std::string& key) {
    return parse_int(keyed(key), key);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("line " + std::to_string(line_no_) + ": " + what);
  }

  long long parse_int(const std::string& text, const std::string& what) const {
    std::istringstream ss(text);
    long long v = 0;
    if (!(ss >> v) || !(ss >> std::ws).eof()) fail("bad integer for " + what);
    return v;
  }

  std::vector<long long> parse_ints(const std::string& text) const {
    std::istringstream ss(text);
    std::vector<long long> values;
    long long v = 0;
    while (ss >> v) values.push_back(v);
    if (!ss.eof()) fail("bad integer list");
    return values;
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

void write_name(std::ostream& out, const std::string& name) {
  out << "name";
  if (!name.empty()) out << ' ' << name;
  out << '\n';
}

void write_ints(std::ostream& out, const char* key, const std::vector<int>& v) {
  out << key;
  for (const int x : v) out << ' ' << x;
  out << '\n';
}

std::vector<int> to_ints(const std::vector<long long>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

void write_instance(std::ostream& out, const Instance& instance) {
  out << "# two-bar chart instance\n";
  write_name(out, instance.name());
  out << "denominator " << instance.denominator() << '\n';
  out << "charts " << instance.size() << '\n';
  for (const Chart& c : instance.charts()) {
    out << c.a.units << ' ' << c.b.units << '\n';
  }
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

Instance read_instance(std::istream& in) {
  LineReader reader(in);
  std::string name = reader.keyed("name");
  const long long denominator = reader.keyed_int("denominator");
  const long long n = reader.keyed_int("charts");
  if (n < 1 || n > 1'000'000) reader.fail("chart count out of range");
  if (denominator < 1 || denominator > 1'000'000'000) {
    reader.fail("denominator out of range");
  }
  std::vector<Chart> charts;
  for (long long i = 0; i < n; ++i) {
    const auto values = reader.parse_ints(reader.next("chart heights"));
    if (values.size() != 2) reader.fail("chart line needs two heights");
    if (values[0] < 1 || values[0] > denominator || values[1] < 1 ||
        values[1] > denominator) {
      reader.fail("bar height outside (0, denominator]");
    }
    charts.push_back({Height{static_cast<std::int32_t>(values[0])},
                      Height{static_cast<std::int32_t>(values[1])}});
  }
  if (!reader.at_end()) reader.fail("trailing content after charts");
  return Instance(std::move(charts), std::move(name),
                  static_cast<int>(denominator));
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

void write_packing(std::ostream& out, const PackingFile& file) {
  const Instance& inst = file.instance;
  const CellPacking cells = to_cell_packing(file.packing);
  const UnionCounts counts = count_unions(file.packing);
  out << "# two-bar chart packing\n";
  write_name(out, inst.name());
  out << "algorithm " << file.algorithm << '\n';
  out << "engine " << file.engine << '\n';
  out << "denominator " << inst.denominator() << '\n';
  out << "charts " << inst.size() << '\n';
  out << "length " << packing_length(file.packing) << '\n';
  out << "unions " << counts.k0 << ' ' << counts.k1 << ' ' << counts.k2
      << '\n';
  write_ints(out, "order", file.packing.order);
  write_ints(out, "overlaps", file.packing.overlaps);
  for (int i = 0; i < inst.size(); ++i) {
    out << "place " << i << ' ' << inst[i].a.units << ' ' << inst[i].b.units
        << ' ' << cells.positions[i] << '\n';
  }
}

std::string format_packing(const PackingFile& file) {
  std::ostringstream out;
  write_packing(out, file);
  return out.str();
}

PackingFile read_packing(std::istream& in) {
  LineReader reader(in);
  std::string name = reader.keyed("name");
  std::string algorithm = reader.keyed("algorithm");
  std::string engine = reader.keyed("engine");
  const long long denominator = reader.keyed_int("denominator");
  const long long n = reader.keyed_int("charts");
  if (n < 1 || n > 1'000'000) reader.fail("chart count out of range");
  if (denominator < 1 || denominator > 1'000'000'000) {
    reader.fail("denominator out of range");
  }
  const long long length = reader.keyed_int("length");
  const auto unions = reader.parse_ints(reader.keyed("unions"));
  if (unions.size() != 3) reader.fail("unions needs k0 k1 k2");
  SequencePacking packing;
  packing.order = to_ints(reader.parse_ints(reader.keyed("order")));
  packing.overlaps = to_ints(reader.parse_ints(reader.keyed("overlaps")));

  std::vector<Chart> charts(n);
  CellPacking cells;
  cells.positions.assign(n, 0);
  for (long long i = 0; i < n; ++i) {
    const auto v = reader.parse_ints(reader.keyed("place"));
    if (v.size() != 4 || v[0] != i) reader.fail("place lines must be 'place i a b cell' in chart order");
    if (v[1] < 1 || v[1] > denominator || v[2] < 1 || v[2] > denominator) {
      reader.fail("bar height outside (0, denominator]");
    }
    charts[i] = {Height{static_cast<std::int32_t>(v[1])},
                 Height{static_cast<std::int32_t>(v[2])}};
    cells.positions[i] = static_cast<int>(v[3]);
  }
  if (!reader.at_end()) reader.fail("trailing content after place lines");

  PackingFile file{std::move(algorithm), std::move(engine),
                   Instance(std::move(charts), std::move(name),
                            static_cast<int>(denominator)),
                   std::move(packing)};
  const ValidationResult check = validate(file.instance, file.packing);
  if (!check.ok()) throw InvalidInput("packing does not validate: " + check.describe());
  const UnionCounts counts = count_unions(file.packing);
  if (to_cell_packing(file.packing) != cells ||
      packing_length(file.packing) != length || counts.k0 != unions[0] ||
      counts.k1 != unions[1] || counts.k2 != unions[2]) {
    throw InvalidInput("packing summary lines disagree with order/overlaps");
  }
  return file;
}

PackingFile parse_packing(const std::string& text) {
  std::istringstream in(text);
  return read_packing(in);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_instance(in);
}

PackingFile load_packing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_packing(in);
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("failed writing " + path);
}

}  // namespace bcpp
