#include "affkm/description.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace affkm {

namespace {

struct Word {
  std::string text;
  int column;
};

std::vector<Word> split_words(const std::string& line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int to_int(const Word& w, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w.text, &used);
    if (used != w.text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, w.column, "expected an integer, found '" + w.text + "'");
  }
}

}  // namespace

AlgebraDescription parse_description(const std::string& text) {
  AlgebraDescription desc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool schema = false;
  std::string type;
  int type_line = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<StructureConstant> constants;
  std::vector<std::pair<std::vector<Word>, int>> pending_constants;
  bool has_diagram = false;
  while (std::getline(in, raw)) {
    ++line;
    auto words = split_words(raw);
    if (words.empty()) continue;
    const std::string& key = words[0].text;
    auto need_args = [&](std::size_t n) {
      if (words.size() < n + 1) throw ParseError(line, static_cast<int>(raw.size()) + 1, "missing value after '" + key + "'");
    };
    if (!schema && key != "schema") throw ParseError(line, words[0].column, "file must start with 'schema 1'");
    if (key == "schema") {
      need_args(1);
      if (schema) throw ParseError(line, words[0].column, "duplicate schema line");
      if (words.size() != 2 || words[1].text != "1")
        throw ParseError(line, words[1].column, "unsupported schema '" + words[1].text + "'");
      schema = true;
    } else if (key == "type") {
      need_args(1);
      if (!type.empty()) throw ParseError(line, words[0].column, "duplicate type line");
      if (words.size() > 2) throw ParseError(line, words[2].column, "unexpected '" + words[2].text + "'");
      type = words[1].text;
      type_line = line;
    } else if (key == "diagram") {
      need_args(1);
      if (has_diagram) throw ParseError(line, words[0].column, "duplicate diagram line");
      has_diagram = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        int v = to_int(words[i], line);
        if (v < 1) throw ParseError(line, words[i].column, "diagram images are 1-based");
        desc.diagram.push_back(v - 1);
      }
    } else if (key == "cartan") {
      need_args(1);
      std::vector<int> row;
      for (std::size_t i = 1; i < words.size(); ++i) row.push_back(to_int(words[i], line));
      cartan.push_back(row);
    } else if (key == "constant") {
      need_args(3);
      if (words.size() > 4) throw ParseError(line, words[4].column, "unexpected '" + words[4].text + "'");
      pending_constants.emplace_back(words, line);
    } else {
      throw ParseError(line, words[0].column, "unknown keyword '" + key + "'");
    }
  }
  if (!schema) throw ParseError(line + 1, 1, "missing 'schema 1'");
  if (type.empty()) throw ParseError(line + 1, 1, "missing 'type' line");
  if (type == "TABLE") {
    if (cartan.empty()) throw ParseError(type_line, 1, "TABLE type needs cartan rows");
    const int rank = static_cast<int>(cartan.size());
    for (const auto& [words, l] : pending_constants) {
      auto a = parse_root_name(words[1].text, rank);
      if (!a) throw ParseError(l, words[1].column, "bad root name '" + words[1].text + "'");
      auto b = parse_root_name(words[2].text, rank);
      if (!b) throw ParseError(l, words[2].column, "bad root name '" + words[2].text + "'");
      constants.push_back({*a, *b, to_int(words[3], l)});
    }
    desc.datum = make_table_datum(cartan, constants);
  } else {
    if (!cartan.empty() || !pending_constants.empty())
      throw ParseError(type_line, 1, "cartan and constant lines need 'type TABLE'");
    desc.datum = make_datum(type);
  }
  if (has_diagram && desc.diagram.size() != desc.datum.cartan.size())
    throw ParseError(line, 1, "diagram needs one image per simple root");
  return desc;
}

AlgebraDescription read_description(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_description(ss.str());
}

LoopAlgebraPtr build_algebra(const AlgebraDescription& desc) {
  AlgebraPtr g;
  try {
    g = ChevAlgebra::build(desc.datum);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
  DiagramPtr sigma;
  if (desc.diagram.empty()) {
    sigma = DiagramAuto::identity(g);
  } else {
    try {
      sigma = DiagramAuto::build(g, desc.diagram);
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  return std::make_shared<const LoopAlgebra>(sigma);
}

LoopAlgebraPtr load_algebra(const std::string& path_or_type) {
  const bool looks_like_path = path_or_type.find_first_of("./") != std::string::npos;
  if (!looks_like_path && !std::filesystem::exists(path_or_type)) {
    AlgebraDescription d;
    d.datum = make_datum(path_or_type);
    return build_algebra(d);
  }
  return build_algebra(read_description(path_or_type));
}

}  // namespace affkm
