#include <sumprod/io.hpp>

#include <fstream>
#include <sstream>

namespace sumprod {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

FieldSpec parse_header(std::string_view line) {
  constexpr std::string_view prefix = "#field ";
  if (line.substr(0, prefix.size()) != prefix)
    throw usage_error("missing '#field' header line");
  return FieldSpec::parse(line.substr(prefix.size()));
}

} // namespace

std::string dist_to_tsv(const Dist& d) {
  std::string out = "#field " + d.field().str() + "\n";
  for (const auto& [a, q] : d.atoms()) {
    out += a.str();
    out += '\t';
    out += q.get_num().get_str();
    out += '/';
    out += q.get_den().get_str();
    out += '\n';
  }
  return out;
}

Dist dist_from_tsv(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw usage_error("empty distribution file");
  FieldSpec f = parse_header(lines[0]);
  std::vector<std::pair<Scalar, Rational>> atoms;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto fields = split_tabs(lines[i]);
    if (fields.size() != 2)
      throw usage_error("distribution line " + std::to_string(i + 1) +
                        ": expected <scalar>\\t<num>/<den>");
    atoms.emplace_back(Scalar::parse(f, fields[0]), parse_rational(fields[1]));
  }
  return Dist::from_atoms(f, std::move(atoms));
}

std::string set_to_tsv(const FieldSpec& f, const std::vector<Scalar>& elems) {
  std::string out = "#field " + f.str() + "\n";
  for (const auto& a : elems) {
    out += a.str();
    out += '\n';
  }
  return out;
}

std::pair<FieldSpec, std::vector<Scalar>>
set_from_tsv(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw usage_error("empty set file");
  FieldSpec f = parse_header(lines[0]);
  std::vector<Scalar> elems;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    elems.push_back(Scalar::parse(f, lines[i]));
  }
  return {f, std::move(elems)};
}

std::pair<FieldSpec, std::vector<std::vector<Scalar>>>
tuples_from_tsv(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw usage_error("empty tuple file");
  FieldSpec f = parse_header(lines[0]);
  std::vector<std::vector<Scalar>> tuples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<Scalar> t;
    for (auto fld : split_tabs(lines[i])) t.push_back(Scalar::parse(f, fld));
    tuples.push_back(std::move(t));
  }
  return {f, std::move(tuples)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

Dist load_dist(const std::string& path) {
  return dist_from_tsv(read_file(path));
}

void save_dist(const Dist& d, const std::string& path) {
  write_file(path, dist_to_tsv(d));
}

} // namespace sumprod
