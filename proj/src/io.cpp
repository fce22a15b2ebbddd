#include "pachner/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "pachner/error.hpp"

namespace pachner::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Vertex parse_label(std::string_view token, std::size_t line_no) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a vertex label");
  return v;
}

}  // namespace

Complex parse_facet_list(std::string_view text) {
  std::vector<Simplex> facets;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<Vertex> labels;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      labels.push_back(parse_label(line.substr(start, end - start), line_no));
      pos = end;
    }
    facets.push_back(Simplex::from_vertices(std::move(labels)));
  }
  return Complex::from_facets(std::move(facets));
}

std::string format_facet_list(const Complex& c) {
  std::ostringstream os;
  for (const auto& f : c.facets()) os << f << '\n';
  return os.str();
}

Complex parse_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("structured document: ") + e.what());
  }
  try {
    const int dim = doc.at("dim").get<int>();
    auto raw = doc.at("facets").get<std::vector<std::vector<Vertex>>>();
    Complex c = Complex::from_facets(raw);
    if (c.dim() != dim)
      throw Error(ErrorCode::MixedDimensions,
                  "declared dim " + std::to_string(dim) + " but facets have dim " + std::to_string(c.dim()));
    NameTable names;
    if (doc.contains("names")) {
      for (const auto& [key, value] : doc.at("names").items())
        names.emplace(parse_label(key, 0), value.get<std::string>());
    }
    return c.with_names(std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("structured document: ") + e.what());
  }
}

std::string format_structured(const Complex& c) {
  nlohmann::ordered_json doc;
  doc["dim"] = c.dim();
  auto facets = nlohmann::ordered_json::array();
  for (const auto& f : c.facets())
    facets.push_back(std::vector<Vertex>(f.begin(), f.end()));
  doc["facets"] = std::move(facets);
  if (!c.names().empty()) {
    auto names = nlohmann::ordered_json::object();
    for (const auto& [label, name] : c.names()) names[std::to_string(label)] = name;
    doc["names"] = std::move(names);
  }
  return doc.dump() + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
}

Complex load(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return path.extension() == ".json" ? parse_structured(text) : parse_facet_list(text);
}

void save(const Complex& c, const std::filesystem::path& path) {
  write_file(path, path.extension() == ".json" ? format_structured(c) : format_facet_list(c));
}

std::uint64_t digest(const Complex& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : format_facet_list(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(const Complex& c) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << digest(c);
  return os.str();
}

}  // namespace pachner::io
