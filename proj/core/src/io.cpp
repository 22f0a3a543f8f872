// Copyright 2026 The zxalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxalg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "zxalg/error.hpp"

namespace zxalg {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    if (start == pos_) fail("expected a generator name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Raw text up to the matching ')', split at top-level commas.
  std::vector<std::pair<std::string, std::pair<int, int>>> arguments() {
    std::vector<std::pair<std::string, std::pair<int, int>>> out;
    std::string current;
    std::pair<int, int> where{line_, column_};
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated argument list");
      char c = text_[pos_];
      if (c == ')' || c == ',') {
        out.emplace_back(trim(current), where);
        advance();
        if (c == ')') return out;
        current.clear();
        where = {line_, column_};
        continue;
      }
      current += c;
      advance();
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

class DiagramParser {
 public:
  DiagramParser(Cursor& cursor, const Ring& ring) : in_(cursor), ring_(ring) {}

  Diagram term() {
    Diagram out = tensor();
    while (in_.accept(';')) {
      in_.skip_space();
      int line = in_.line(), col = in_.column();
      Diagram next = tensor();
      try {
        out = seq(out, next);
      } catch (const TypeError& e) {
        throw ParseError(e.what(), line, col);
      }
    }
    return out;
  }

 private:
  Diagram tensor() {
    Diagram out = atom();
    while (in_.accept('|')) out = par(out, atom());
    return out;
  }

  Diagram atom() {
    if (in_.accept('(')) {
      Diagram inner = term();
      in_.expect(')');
      return inner;
    }
    in_.skip_space();
    int line = in_.line(), col = in_.column();
    std::string name = in_.identifier();
    std::vector<std::pair<std::string, std::pair<int, int>>> args;
    if (in_.peek() == '(') {
      in_.expect('(');
      args = in_.arguments();
    }
    try {
      return generator(name, args, line, col);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(name + ": " + e.what(), line, col);
    }
  }

  int count(const std::pair<std::string, std::pair<int, int>>& arg) {
    const std::string& s = arg.first;
    bool digits = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos && s.size() < 6;
    if (!digits) throw ParseError("expected a wire count, got '" + s + "'", arg.second.first, arg.second.second);
    return std::stoi(s);
  }

  Element phase(const std::pair<std::string, std::pair<int, int>>& arg) {
    try {
      return ring_.parse_element(arg.first);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), arg.second.first, arg.second.second);
    }
  }

  Diagram generator(const std::string& name, const std::vector<std::pair<std::string, std::pair<int, int>>>& args,
                    int line, int col) {
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi)
        throw ParseError(name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                 " arguments", line, col);
    };
    if (name == "Z") {
      arity(2, 3);
      return green(count(args[0]), count(args[1]), args.size() == 3 ? phase(args[2]) : ring_.one());
    }
    if (name == "X") {
      arity(2, 3);
      bool pi = false;
      if (args.size() == 3) {
        if (args[2].first == "pi")
          pi = true;
        else if (args[2].first != "0")
          throw ParseError("red spider phase must be 0 or pi", args[2].second.first, args[2].second.second);
      }
      return red_spider(count(args[0]), count(args[1]), pi);
    }
    if (name == "id") {
      arity(0, 1);
      return identity(args.empty() ? 1 : count(args[0]));
    }
    if (name == "copy") {
      arity(1, 1);
      return copy_gate(count(args[0]));
    }
    if (name == "gbox") {
      arity(1, 1);
      return gbox(phase(args[0]));
    }
    arity(0, 0);
    if (name == "H") return hadamard();
    if (name == "T") return triangle();
    if (name == "Tinv") return triangle_inv();
    if (name == "P") return red_pi();
    if (name == "swap") return swap_wires();
    if (name == "cap") return cap();
    if (name == "cup") return cup();
    if (name == "empty") return Diagram();
    if (name == "AND") return and_gate();
    if (name == "XOR") return xor_gate();
    if (name == "NOT") return not_gate();
    throw ParseError("unknown generator '" + name + "'", line, col);
  }

  Cursor& in_;
  const Ring& ring_;
};

std::string format_generator(const Generator& g, const Ring& ring) {
  auto nm = [&](const char* name) { return std::string(name) + "(" + std::to_string(g.inputs) + "," + std::to_string(g.outputs); };
  switch (g.kind) {
    case GeneratorKind::green: return nm("Z") + "," + ring.format(*g.phase) + ")";
    case GeneratorKind::red: return nm("X") + ")";
    case GeneratorKind::hadamard: return "H";
    case GeneratorKind::triangle: return "T";
    case GeneratorKind::triangle_inv: return "Tinv";
    case GeneratorKind::red_pi: return "P";
    case GeneratorKind::swap: return "swap";
    case GeneratorKind::cap: return "cap";
    case GeneratorKind::cup: return "cup";
    case GeneratorKind::identity:
      if (g.inputs == 0) return "empty";
      return g.inputs == 1 ? "id" : "id(" + std::to_string(g.inputs) + ")";
    case GeneratorKind::and_gate: return "AND";
    case GeneratorKind::xor_gate: return "XOR";
    case GeneratorKind::not_gate: return "NOT";
    case GeneratorKind::copy: return "copy(" + std::to_string(g.outputs) + ")";
    case GeneratorKind::gbox: return "gbox(" + ring.format(*g.phase) + ")";
  }
  return "?";
}

void format_into(const Diagram& d, const Ring& ring, std::string& out) {
  switch (d.shape()) {
    case Diagram::Shape::generator:
      out += format_generator(d.generator(), ring);
      return;
    case Diagram::Shape::seq:
      format_into(d.lhs(), ring, out);
      out += " ; ";
      if (d.rhs().shape() == Diagram::Shape::seq) {
        out += '(';
        format_into(d.rhs(), ring, out);
        out += ')';
      } else {
        format_into(d.rhs(), ring, out);
      }
      return;
    case Diagram::Shape::par: {
      bool wrap_left = d.lhs().shape() == Diagram::Shape::seq;
      bool wrap_right = d.rhs().shape() != Diagram::Shape::generator;
      if (wrap_left) out += '(';
      format_into(d.lhs(), ring, out);
      if (wrap_left) out += ')';
      out += " | ";
      if (wrap_right) out += '(';
      format_into(d.rhs(), ring, out);
      if (wrap_right) out += ')';
      return;
    }
  }
}

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  return std::string(s.substr(b, s.find_last_not_of(" \t\r") - b + 1));
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  lines.push_back(current);
  return lines;
}

std::string without_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Diagram parse_diagram(std::string_view text, const Ring& ring, int first_line, int first_column) {
  Cursor in(text, first_line, first_column);
  DiagramParser parser(in, ring);
  if (in.at_end()) in.fail("empty diagram text");
  Diagram d = parser.term();
  if (!in.at_end()) in.fail(std::string("unexpected '") + in.peek() + "'");
  return d;
}

std::string format_diagram(const Diagram& d, const Ring& ring) {
  std::string out;
  format_into(d, ring, out);
  return out;
}

DenseMatrix parse_matrix(std::string_view text, const Ring& ring) {
  std::vector<std::pair<std::string, std::pair<int, int>>> tokens;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::string line = without_comment(lines[l]);
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({line.substr(start, i - start), {static_cast<int>(l + 1), static_cast<int>(start + 1)}});
    }
  }
  if (tokens.size() < 2) throw ParseError("matrix needs a 'rows cols' header", 1, 1);
  auto dim = [&](const auto& tok) {
    if (tok.first.find_first_not_of("0123456789") != std::string::npos || tok.first.size() > 7)
      throw ParseError("bad dimension '" + tok.first + "'", tok.second.first, tok.second.second);
    return static_cast<std::size_t>(std::stoul(tok.first));
  };
  std::size_t rows = dim(tokens[0]), cols = dim(tokens[1]);
  if (tokens.size() - 2 != rows * cols)
    throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " +
                         std::to_string(tokens.size() - 2),
                     tokens.back().second.first, tokens.back().second.second);
  std::vector<Element> entries;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    try {
      entries.push_back(ring.parse_element(tokens[i].first));
    } catch (const Error& e) {
      throw ParseError(e.what(), tokens[i].second.first, tokens[i].second.second);
    }
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

Derivation parse_derivation(std::string_view text, const Ring& ring) {
  Derivation out;
  bool started = false;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const int line_no = static_cast<int>(l + 1);
    std::string line = without_comment(lines[l]);
    if (strip(line).empty()) continue;
    auto diagram_after = [&](std::size_t offset) {
      return parse_diagram(std::string_view(line).substr(offset), ring, line_no, static_cast<int>(offset + 1));
    };
    std::string body = strip(line);
    if (body.rfind("start:", 0) == 0) {
      if (started) throw ParseError("second 'start:' line", line_no, 1);
      out.start = diagram_after(line.find("start:") + 6);
      started = true;
      continue;
    }
    if (!started) throw ParseError("derivation must begin with 'start:'", line_no, 1);
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("step needs '-> <diagram>'", line_no, static_cast<int>(line.size()));
    DerivationStep step;
    step.line = line_no;
    std::istringstream head(line.substr(0, arrow));
    std::string word;
    head >> word;
    if (word == "rule") {
      if (!(head >> step.rule)) throw ParseError("rule step needs a rule name", line_no, 1);
      while (head >> word) {
        std::string value;
        if (!(head >> value)) throw ParseError("'" + word + "' needs a value", line_no, 1);
        if (word == "at") {
          try {
            step.position = parse_position(value);
          } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no, static_cast<int>(line.find(value) + 1));
          }
        } else if (word == "with") {
          // Bindings run up to an optional trailing "at <position>".
          std::string joined = value;
          std::streampos mark = head.tellg();
          while (head >> word && word != "at") {
            joined += word;
            mark = head.tellg();
          }
          head.clear();
          head.seekg(mark);
          std::istringstream assignments(joined);
          std::string item;
          while (std::getline(assignments, item, ',')) {
            item = strip(item);
            if (item.empty()) continue;
            std::size_t eq = item.find('=');
            if (eq == std::string::npos) throw ParseError("expected name=value, got '" + item + "'", line_no, 1);
            step.arguments[strip(item.substr(0, eq))] = strip(item.substr(eq + 1));
          }
        } else {
          throw ParseError("unexpected '" + word + "'", line_no, static_cast<int>(line.find(word) + 1));
        }
      }
    } else if (word != "semantic") {
      throw ParseError("expected 'rule' or 'semantic', got '" + word + "'", line_no, 1);
    }
    step.result = diagram_after(arrow + 2);
    out.steps.push_back(std::move(step));
  }
  if (!started) throw ParseError("derivation has no 'start:' line", 1, 1);
  return out;
}

std::vector<EquationFixture> parse_fixtures(std::string_view text, const Ring& ring) {
  std::vector<EquationFixture> out;
  std::vector<std::string> lines = split_lines(text);
  bool have_lhs = false, have_rhs = false;
  auto close = [&](int line_no) {
    if (!out.empty() && !(have_lhs && have_rhs))
      throw ParseError("fixture '" + out.back().name + "' needs lhs: and rhs:", line_no, 1);
  };
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const int line_no = static_cast<int>(l + 1);
    std::string line = without_comment(lines[l]);
    std::string body = strip(line);
    if (body.empty()) continue;
    if (body.front() == '[') {
      close(line_no);
      if (body.back() != ']') throw ParseError("unterminated section name", line_no, 1);
      out.push_back({body.substr(1, body.size() - 2), Diagram(), Diagram()});
      have_lhs = have_rhs = false;
      continue;
    }
    if (out.empty()) throw ParseError("expected '[name]'", line_no, 1);
    std::size_t colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : strip(line.substr(0, colon));
    if (key != "lhs" && key != "rhs") throw ParseError("expected 'lhs:' or 'rhs:'", line_no, 1);
    Diagram d = parse_diagram(std::string_view(line).substr(colon + 1), ring, line_no, static_cast<int>(colon + 2));
    if (key == "lhs") {
      out.back().lhs = d;
      have_lhs = true;
    } else {
      out.back().rhs = d;
      have_rhs = true;
    }
  }
  close(static_cast<int>(lines.size()));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace zxalg
