#include "chordal/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace chordal {

namespace detail {

std::vector<Token> tokenize(const std::string& text, int line_offset) {
  std::vector<Token> out;
  int line = 1 + line_offset, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string s) {
    Token t;
    t.kind = k;
    t.text = std::move(s);
    t.line = line;
    t.column = col;
    out.push_back(std::move(t));
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits = text.substr(i, j - i);
      push(Token::Int, digits);
      out.back().value = mpz_class(digits);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Token::Name, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '+':
        push(Token::Plus, "+");
        break;
      case '-':
        push(Token::Minus, "-");
        break;
      case '*':
        push(Token::Star, "*");
        break;
      case '^':
        push(Token::Caret, "^");
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    ++col;
    ++i;
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.column = col;
  out.push_back(std::move(end));
  return out;
}

}  // namespace detail

namespace {

struct ContentLine {
  std::string text;
  int number;  // 1-based line in the original stream
};

std::vector<ContentLine> content_lines(std::istream& in) {
  std::vector<ContentLine> out;
  std::string line;
  int num = 0;
  while (std::getline(in, line)) {
    ++num;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back({line, num});
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string w;
  while (iss >> w) out.push_back(w);
  return out;
}

struct Header {
  FieldSpec field;
  std::vector<std::string> names;
  std::size_t next;  // index into content lines
};

Header parse_header(const std::vector<ContentLine>& lines) {
  if (lines.empty()) throw ParseError("empty input, expected 'ring <char> <nvars>'", 1, 1);
  std::vector<std::string> w = split_ws(lines[0].text);
  if (w.size() != 3 || w[0] != "ring")
    throw ParseError("expected 'ring <characteristic> <nvars>'", lines[0].number, 1);
  Header h;
  try {
    unsigned long ch = std::stoul(w[1]);
    h.field.characteristic = static_cast<std::uint32_t>(ch);
    if (ch != h.field.characteristic) throw std::out_of_range("");
  } catch (const std::exception&) {
    throw ParseError("bad characteristic '" + w[1] + "'", lines[0].number, 1);
  }
  h.field.validate();
  int nvars = 0;
  try {
    nvars = std::stoi(w[2]);
  } catch (const std::exception&) {
    throw ParseError("bad variable count '" + w[2] + "'", lines[0].number, 1);
  }
  if (nvars <= 0 || nvars > kMaxVars)
    throw ParseError("variable count out of range", lines[0].number, 1);
  if (lines.size() < 2)
    throw ParseError("expected a line of variable names", lines[0].number + 1, 1);
  h.names = split_ws(lines[1].text);
  if (static_cast<int>(h.names.size()) != nvars)
    throw ParseError("expected " + std::to_string(nvars) + " variable names, got " +
                         std::to_string(h.names.size()),
                     lines[1].number, 1);
  h.next = 2;
  return h;
}

template <class F>
Ideal<F> read_ideal_with(F field, const Header& h, const std::vector<ContentLine>& lines,
                         MonomialOrder order) {
  RingPtr<F> ring = make_ring(std::move(field), h.names, order);
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = h.next; i < lines.size(); ++i)
    gens.push_back(parse_polynomial(ring, lines[i].text, lines[i].number - 1));
  return make_ideal(ring, std::move(gens));
}

template <class F>
PolyMatrix<F> read_matrix_with(F field, const Header& h, const std::vector<ContentLine>& lines,
                               MonomialOrder order) {
  RingPtr<F> ring = make_ring(std::move(field), h.names, order);
  if (h.next >= lines.size())
    throw ParseError("expected 'matrix <rows> <cols>'", lines.back().number + 1, 1);
  std::vector<std::string> w = split_ws(lines[h.next].text);
  if (w.size() != 3 || w[0] != "matrix")
    throw ParseError("expected 'matrix <rows> <cols>'", lines[h.next].number, 1);
  int rows = 0, cols = 0;
  try {
    rows = std::stoi(w[1]);
    cols = std::stoi(w[2]);
  } catch (const std::exception&) {
    throw ParseError("bad matrix shape", lines[h.next].number, 1);
  }
  if (rows <= 0 || cols <= 0) throw ParseError("bad matrix shape", lines[h.next].number, 1);
  std::size_t need = static_cast<std::size_t>(rows) * cols;
  if (lines.size() - h.next - 1 != need)
    throw ParseError("expected " + std::to_string(need) + " matrix entries, got " +
                         std::to_string(lines.size() - h.next - 1),
                     lines[h.next].number, 1);
  PolyMatrix<F> m;
  m.ring = ring;
  m.rows = rows;
  m.cols = cols;
  for (std::size_t i = h.next + 1; i < lines.size(); ++i)
    m.entries.push_back(parse_polynomial(ring, lines[i].text, lines[i].number - 1));
  return m;
}

}  // namespace

IdealVariant read_ideal(std::istream& in, MonomialOrder order) {
  std::vector<ContentLine> lines = content_lines(in);
  Header h = parse_header(lines);
  if (h.field.characteristic == 0)
    return read_ideal_with(RationalField{}, h, lines, order);
  return read_ideal_with(PrimeField(h.field.characteristic), h, lines, order);
}

IdealVariant read_ideal_file(const std::string& path, MonomialOrder order) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return read_ideal(in, order);
}

MatrixVariant read_matrix(std::istream& in, MonomialOrder order) {
  std::vector<ContentLine> lines = content_lines(in);
  Header h = parse_header(lines);
  if (h.field.characteristic == 0)
    return read_matrix_with(RationalField{}, h, lines, order);
  return read_matrix_with(PrimeField(h.field.characteristic), h, lines, order);
}

MatrixVariant read_matrix_file(const std::string& path, MonomialOrder order) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return read_matrix(in, order);
}

}  // namespace chordal
