#include "polyforge/presentation.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "polyforge/errors.hpp"

namespace polyforge {

std::vector<bool> Presentation::involution_mask() const {
  std::vector<bool> mask(static_cast<std::size_t>(generator_count), false);
  for (const Word& w : relators) {
    const auto& ls = w.letters();
    if (ls.size() == 2 && ls[0] == ls[1])
      mask[static_cast<std::size_t>(Word::letter_index(ls[0]))] = true;
  }
  return mask;
}

void Presentation::check() const {
  if (generator_count < 1)
    throw InvalidArgumentError("presentation needs at least one generator");
  if (!generator_names.empty() &&
      static_cast<int>(generator_names.size()) != generator_count)
    throw InvalidArgumentError("generator name count mismatch");
  for (const Word& w : relators) {
    if (w.empty()) throw InvalidArgumentError("empty relator");
    if (w.max_index() >= generator_count)
      throw InvalidArgumentError("relator references unknown generator");
    Word reduced = w;
    reduced.freely_reduce();
    if (!(reduced == w))
      throw InvalidArgumentError("relator is not freely reduced");
  }
}

namespace {

struct Token {
  enum Kind { kName, kInt, kLParen, kRParen, kLBracket, kRBracket, kComma,
              kCaret, kEnd };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(std::string_view text, int line) : text_(text), line_(line) {}

  Token next() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
    const int col = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) return {Token::kEnd, "", line_, col};
    const char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; return {Token::kLParen, "(", line_, col};
      case ')': ++pos_; return {Token::kRParen, ")", line_, col};
      case '[': ++pos_; return {Token::kLBracket, "[", line_, col};
      case ']': ++pos_; return {Token::kRBracket, "]", line_, col};
      case ',': ++pos_; return {Token::kComma, ",", line_, col};
      case '^': ++pos_; return {Token::kCaret, "^", line_, col};
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string t(text_.substr(start, pos_ - start));
      if (t == "-") throw ParseError(line_, col, "expected digits after '-'");
      return {Token::kInt, std::move(t), line_, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_++;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      return {Token::kName, std::string(text_.substr(start, pos_ - start)),
              line_, col};
    }
    throw ParseError(line_, col, std::string("unexpected character '") + c +
                                      "'");
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

class WordParser {
 public:
  WordParser(Lexer& lex, const std::map<std::string, int>& gens)
      : lex_(lex), gens_(gens) {
    advance();
  }

  // word (',' word)* until end of line
  std::vector<std::pair<Word, Token>> parse_list() {
    std::vector<std::pair<Word, Token>> words;
    while (true) {
      Token start = cur_;
      words.emplace_back(parse_word(), start);
      if (cur_.kind == Token::kComma) {
        advance();
        continue;
      }
      if (cur_.kind == Token::kEnd) break;
      throw ParseError(cur_.line, cur_.col, "unexpected token '" + cur_.text +
                                                "' after word");
    }
    return words;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool starts_atom() const {
    return cur_.kind == Token::kName || cur_.kind == Token::kLParen ||
           cur_.kind == Token::kLBracket;
  }

  Word parse_word() {
    if (!starts_atom())
      throw ParseError(cur_.line, cur_.col, "expected a word");
    Word w;
    while (starts_atom()) w.append(parse_term());
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    if (cur_.kind == Token::kCaret) {
      advance();
      if (cur_.kind != Token::kInt)
        throw ParseError(cur_.line, cur_.col, "expected exponent after '^'");
      const int e = std::stoi(cur_.text);
      advance();
      return atom.pow(e);
    }
    return atom;
  }

  Word parse_atom() {
    switch (cur_.kind) {
      case Token::kName: {
        auto it = gens_.find(cur_.text);
        if (it == gens_.end())
          throw ParseError(cur_.line, cur_.col,
                           "unknown generator '" + cur_.text + "'");
        advance();
        return Word::generator(it->second);
      }
      case Token::kLParen: {
        advance();
        Word w = parse_word();
        expect(Token::kRParen, ")");
        return w;
      }
      case Token::kLBracket: {
        advance();
        Word a = parse_word();
        expect(Token::kComma, ",");
        Word b = parse_word();
        expect(Token::kRBracket, "]");
        return Word::commutator(a, b);
      }
      default:
        throw ParseError(cur_.line, cur_.col, "expected a word");
    }
  }

  void expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(cur_.line, cur_.col,
                       std::string("expected '") + what + "'");
    advance();
  }

  Lexer& lex_;
  const std::map<std::string, int>& gens_;
  Token cur_;
};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::map<std::string, int> gen_index;
  std::vector<std::pair<Word, Token>> relators;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    Lexer lex(line, line_no);
    Token head = lex.next();
    if (head.kind == Token::kEnd) {
      if (eol == text.size()) break;
      continue;
    }
    if (head.kind != Token::kName)
      throw ParseError(head.line, head.col, "expected 'gens' or 'rel'");

    if (head.text == "gens") {
      Token t = lex.next();
      if (t.kind == Token::kEnd)
        throw ParseError(t.line, t.col, "expected generator names");
      while (t.kind != Token::kEnd) {
        if (t.kind != Token::kName || !valid_name(t.text))
          throw ParseError(t.line, t.col, "expected a generator name");
        if (gen_index.count(t.text))
          throw ParseError(t.line, t.col,
                           "duplicate generator '" + t.text + "'");
        gen_index[t.text] = static_cast<int>(p.generator_names.size());
        p.generator_names.push_back(t.text);
        t = lex.next();
      }
    } else if (head.text == "rel") {
      WordParser wp(lex, gen_index);
      for (auto& [w, tok] : wp.parse_list()) relators.emplace_back(w, tok);
    } else {
      throw ParseError(head.line, head.col,
                       "unknown directive '" + head.text + "'");
    }
    if (eol == text.size()) break;
  }

  p.generator_count = static_cast<int>(p.generator_names.size());
  if (p.generator_count == 0)
    throw ParseError(line_no, 1, "no generators declared");

  for (auto& [w, tok] : relators) {
    w.freely_reduce();
    if (w.empty())
      throw ParseError(tok.line, tok.col, "relator reduces to the empty word");
    p.relators.push_back(w);
  }
  const std::vector<bool> mask = p.involution_mask();
  for (Word& w : p.relators) w.normalize(mask);
  p.check();
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens";
  for (int i = 0; i < p.generator_count; ++i)
    out << ' '
        << (p.generator_names.empty() ? "r" + std::to_string(i)
                                      : p.generator_names[i]);
  out << '\n';
  auto name_of = [&](int idx) {
    return p.generator_names.empty() ? "r" + std::to_string(idx)
                                     : p.generator_names[idx];
  };
  for (const Word& w : p.relators) {
    out << "rel";
    for (int l : w.letters()) {
      out << ' ' << name_of(Word::letter_index(l));
      if (Word::letter_inverted(l)) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

Presentation coxeter_string_presentation(const std::vector<int>& labels) {
  if (labels.empty())
    throw InvalidArgumentError("string Coxeter diagram needs rank >= 2");
  for (int pi : labels)
    if (pi != kInfiniteLabel && pi < 2)
      throw InvalidArgumentError("branch labels must be >= 2");

  const int d = static_cast<int>(labels.size()) + 1;
  Presentation p;
  p.generator_count = d;
  for (int i = 0; i < d; ++i) p.generator_names.push_back("r" + std::to_string(i));

  for (int i = 0; i < d; ++i)
    p.relators.push_back(Word::generator(i).pow(2));
  for (int i = 0; i + 1 < d; ++i) {
    if (labels[static_cast<std::size_t>(i)] == kInfiniteLabel) continue;
    Word pair = Word::generator(i);
    pair.append(Word::generator(i + 1));
    p.relators.push_back(pair.pow(labels[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i + 2 < d; ++i) {
    for (int j = i + 2; j < d; ++j) {
      Word pair = Word::generator(i);
      pair.append(Word::generator(j));
      p.relators.push_back(pair.pow(2));
    }
  }
  p.check();
  return p;
}

}  // namespace polyforge
