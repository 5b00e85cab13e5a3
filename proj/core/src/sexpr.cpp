#include "cwb/sexpr.hpp"

#include <cctype>
#include <charconv>

#include "cwb/errors.hpp"

namespace cwb {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) +
                                         (column == 0 ? "" : ":" + std::to_string(column)) +
                                         ": " + message),
      line_(line),
      column_(column) {}

namespace sexpr {

bool Node::is_form(std::string_view head) const {
  return is_list && !items.empty() && items.front().is_atom() && items.front().atom == head;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  Node read() {
    skip_blank();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, column());
    Node node;
    node.line = line_;
    node.column = column();
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", line_, column());
    if (c == '(') {
      node.is_list = true;
      advance();
      for (;;) {
        skip_blank();
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", node.line, node.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) advance();
    node.atom = std::string(text_.substr(start, pos_ - start));
    return node;
  }

 private:
  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  std::size_t column() const { return pos_ - line_start_ + 1; }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

std::vector<Node> parse_all(std::string_view text) {
  Reader reader(text);
  std::vector<Node> out;
  while (!reader.at_end()) out.push_back(reader.read());
  return out;
}

Node parse_one(std::string_view text) {
  Reader reader(text);
  if (reader.at_end()) throw ParseError("empty input", 1);
  Node node = reader.read();
  if (!reader.at_end()) throw ParseError("trailing input after datum", node.line, node.column);
  return node;
}

std::string to_string(const Node& node) {
  if (node.is_atom()) return node.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < node.items.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(node.items[i]);
  }
  out += ')';
  return out;
}

std::uint64_t atom_to_u64(const Node& node, std::string_view what) {
  if (!node.is_atom() || node.atom.empty()) {
    throw ParseError("expected a number for " + std::string(what), node.line, node.column);
  }
  std::uint64_t value = 0;
  const char* first = node.atom.data();
  const char* last = first + node.atom.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a number for " + std::string(what) + ", got '" + node.atom + "'",
                     node.line, node.column);
  }
  return value;
}

}  // namespace sexpr
}  // namespace cwb
