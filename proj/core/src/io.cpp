#include "setadf/io.hpp"

#include <cctype>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace setadf {

std::string_view instance_kind_name(InstanceKind k) noexcept {
  return k == InstanceKind::Setaf ? "setaf" : "adf";
}

namespace {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Tok { Ident, LParen, RParen, LBracket, RBracket, Comma, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  Location at;
};

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  const Token& peek2() {
    if (!lookahead_) {
      auto saved_pos = pos_;
      auto saved_loc = loc_;
      lookahead_ = scan();
      pos_ = saved_pos;
      loc_ = saved_loc;
    }
    return *lookahead_;
  }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  Token expect(Tok kind) {
    if (current_.kind != kind) {
      throw ParseError("expected " + std::string(tok_name(kind)) + ", found " + describe(current_),
                       current_.at.line, current_.at.column);
    }
    return take();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident) return "'" + t.text + "'";
    return std::string(tok_name(t.kind));
  }

 private:
  void advance() {
    lookahead_.reset();
    current_ = scan();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  Token scan() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
        continue;
      }
      break;
    }
    Location at = loc_;
    if (pos_ >= text_.size()) return {Tok::End, "", at};
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      bump();
      return Token{k, std::string(1, c), at};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case '.': return single(Tok::Dot);
      default: break;
    }
    std::string word;
    while (pos_ < text_.size() &&
           is_valid_argument_name(std::string_view(&text_[pos_], 1))) {
      word += text_[pos_];
      bump();
    }
    if (word.empty()) {
      throw ParseError(std::string("unexpected character '") + c + "'", at.line, at.column);
    }
    return {Tok::Ident, std::move(word), at};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Location loc_;
  Token current_{Tok::End, "", {}};
  std::optional<Token> lookahead_;
};

[[noreturn]] void fail(const std::string& reason, Location at) {
  throw ParseError(reason, at.line, at.column);
}

ArgumentId ident(Lexer& lx) { return ArgumentId(lx.expect(Tok::Ident).text); }

Formula formula(Lexer& lx) {
  Token head = lx.expect(Tok::Ident);
  if (lx.peek().kind != Tok::LParen) return Formula::atom(ArgumentId(head.text));
  lx.take();
  if (head.text == "c") {
    Token v = lx.expect(Tok::Ident);
    lx.expect(Tok::RParen);
    if (v.text == "v") return Formula::top();
    if (v.text == "f") return Formula::bot();
    fail("unknown constant c(" + v.text + ")", v.at);
  }
  std::vector<Formula> args{formula(lx)};
  while (lx.peek().kind == Tok::Comma) {
    lx.take();
    args.push_back(formula(lx));
  }
  lx.expect(Tok::RParen);
  auto arity = [&](std::size_t n) {
    if (args.size() != n) {
      fail(head.text + " takes " + std::to_string(n) + " operand(s), got " +
               std::to_string(args.size()),
           head.at);
    }
  };
  if (head.text == "neg") {
    arity(1);
    return Formula::neg(args[0]);
  }
  if (head.text == "and") return Formula::conj(std::move(args));
  if (head.text == "or") return Formula::disj(std::move(args));
  if (head.text == "imp") {
    arity(2);
    return Formula::imp(args[0], args[1]);
  }
  if (head.text == "iff") {
    arity(2);
    return Formula::iff(args[0], args[1]);
  }
  fail("unknown connective '" + head.text + "'", head.at);
}

std::string join(const std::vector<ArgumentId>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += ids[i].str();
  }
  return s;
}

InstanceKind detect(std::string_view text) {
  Lexer lx(text);
  const Token& first = lx.peek();
  if (first.kind == Tok::Ident) {
    if (first.text == "arg" || first.text == "att") return InstanceKind::Setaf;
    if (first.text == "s" || first.text == "ac") return InstanceKind::Adf;
  }
  fail("cannot detect instance kind from " + Lexer::describe(first), first.at);
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Lexer lx(text);
  Formula f = formula(lx);
  lx.expect(Tok::End);
  return f;
}

Setaf parse_setaf(std::string_view text) {
  Lexer lx(text);
  std::vector<ArgumentId> args;
  std::map<ArgumentId, Location> declared;
  std::vector<std::pair<Attack, Location>> attacks;
  while (lx.peek().kind != Tok::End) {
    Token kw = lx.expect(Tok::Ident);
    lx.expect(Tok::LParen);
    if (kw.text == "arg") {
      ArgumentId a = ident(lx);
      if (!declared.emplace(a, kw.at).second) fail("duplicate-argument " + a.str(), kw.at);
      args.push_back(a);
    } else if (kw.text == "att") {
      lx.expect(Tok::LBracket);
      std::vector<ArgumentId> attackers;
      if (lx.peek().kind != Tok::RBracket) {
        attackers.push_back(ident(lx));
        while (lx.peek().kind == Tok::Comma) {
          lx.take();
          attackers.push_back(ident(lx));
        }
      }
      lx.expect(Tok::RBracket);
      lx.expect(Tok::Comma);
      ArgumentId target = ident(lx);
      attacks.push_back({Attack{std::move(attackers), std::move(target)}, kw.at});
    } else {
      fail("unknown SETAF statement '" + kw.text + "'", kw.at);
    }
    lx.expect(Tok::RParen);
    lx.expect(Tok::Dot);
  }

  std::set<Attack> seen;
  for (auto& [att, at] : attacks) {
    if (att.attackers.empty()) fail("empty-attacker-set", at);
    for (const auto& b : att.attackers) {
      if (!declared.count(b)) fail("unknown-argument " + b.str(), at);
    }
    if (!declared.count(att.target)) fail("unknown-argument " + att.target.str(), at);
    Attack norm = att;
    std::sort(norm.attackers.begin(), norm.attackers.end());
    norm.attackers.erase(std::unique(norm.attackers.begin(), norm.attackers.end()),
                         norm.attackers.end());
    if (!seen.insert(norm).second) fail("duplicate-attack", at);
  }
  std::vector<Attack> plain;
  for (auto& [att, at] : attacks) plain.push_back(std::move(att));
  return Setaf(std::move(args), std::move(plain));
}

Adf parse_adf(std::string_view text) {
  Lexer lx(text);
  std::vector<ArgumentId> stmts;
  std::map<ArgumentId, Location> declared;
  std::map<ArgumentId, Formula> conditions;
  std::vector<std::tuple<ArgumentId, Formula, Location>> acs;
  while (lx.peek().kind != Tok::End) {
    Token kw = lx.expect(Tok::Ident);
    lx.expect(Tok::LParen);
    if (kw.text == "s") {
      ArgumentId s = ident(lx);
      if (!declared.emplace(s, kw.at).second) fail("duplicate-statement " + s.str(), kw.at);
      stmts.push_back(s);
    } else if (kw.text == "ac") {
      ArgumentId s = ident(lx);
      lx.expect(Tok::Comma);
      acs.emplace_back(std::move(s), formula(lx), kw.at);
    } else {
      fail("unknown ADF statement '" + kw.text + "'", kw.at);
    }
    lx.expect(Tok::RParen);
    lx.expect(Tok::Dot);
  }
  for (auto& [s, phi, at] : acs) {
    if (!declared.count(s)) fail("undeclared-statement " + s.str(), at);
    for (const auto& a : phi.atoms()) {
      if (!declared.count(a)) fail("undeclared-atom " + a.str(), at);
    }
    if (!conditions.emplace(s, phi).second) fail("duplicate-acceptance-condition " + s.str(), at);
  }
  for (const auto& s : stmts) {
    if (!conditions.count(s)) fail("missing-acceptance-condition " + s.str(), declared.at(s));
  }
  return Adf(std::move(stmts), std::move(conditions));
}

InstanceDocument parse_instance(std::string_view text, std::optional<InstanceKind> kind,
                                std::string source_path) {
  InstanceKind k = kind ? *kind : detect(text);
  if (k == InstanceKind::Setaf) return {k, parse_setaf(text), std::move(source_path)};
  return {k, parse_adf(text), std::move(source_path)};
}

std::string to_text(const Setaf& f) {
  std::string out;
  for (const auto& a : f.arguments()) out += "arg(" + a.str() + ").\n";
  for (const auto& att : f.attacks()) {
    out += "att([" + join(att.attackers) + "]," + att.target.str() + ").\n";
  }
  return out;
}

std::string to_text(const Adf& d) {
  std::string out;
  for (const auto& s : d.statements()) out += "s(" + s.str() + ").\n";
  for (std::size_t i = 0; i < d.statements().size(); ++i) {
    out += "ac(" + d.statements()[i].str() + "," + d.condition(i).to_string() + ").\n";
  }
  return out;
}

std::string format_labelling(const Labelling& lambda) {
  return "in:{" + join(lambda.part(Value3::In)) + "} out:{" + join(lambda.part(Value3::Out)) +
         "} undec:{" + join(lambda.part(Value3::Undec)) + "}";
}

namespace {

std::vector<ArgumentId> names(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of names");
  std::vector<ArgumentId> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw InvalidInput(std::string(what) + " must contain strings");
    out.emplace_back(x.get<std::string>());
  }
  return out;
}

nlohmann::ordered_json name_array(const std::vector<ArgumentId>& ids) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& a : ids) arr.push_back(a.str());
  return arr;
}

}  // namespace

LabellingDocument read_labelling_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("arguments") || !j.contains("labellings")) {
    throw InvalidInput("labelling document needs 'arguments' and 'labellings'");
  }
  Domain args(names(j["arguments"], "arguments"));
  LabellingDocument doc{LabellingSet(args), std::nullopt};
  if (!j["labellings"].is_array()) throw InvalidInput("'labellings' must be an array");
  for (const auto& l : j["labellings"]) {
    if (!l.is_object()) throw InvalidInput("each labelling must be an object");
    auto part = [&](const char* key) {
      return l.contains(key) ? names(l[key], key) : std::vector<ArgumentId>{};
    };
    try {
      doc.labellings.insert(Labelling::from_parts(args, part("in"), part("out"), part("undec")));
    } catch (const Error& e) {
      throw InvalidInput(std::string("labelling does not partition the arguments: ") + e.what());
    }
  }
  if (j.contains("semantics")) {
    if (!j["semantics"].is_string()) throw InvalidInput("'semantics' must be a string");
    doc.semantics = j["semantics"].get<std::string>();
  }
  return doc;
}

std::string write_labelling_json(const LabellingSet& l,
                                 const std::optional<std::string>& semantics) {
  nlohmann::ordered_json j;
  j["arguments"] = name_array(l.arguments().ids());
  auto arr = nlohmann::ordered_json::array();
  for (const auto& lambda : l) {
    nlohmann::ordered_json x;
    x["in"] = name_array(lambda.part(Value3::In));
    x["out"] = name_array(lambda.part(Value3::Out));
    x["undec"] = name_array(lambda.part(Value3::Undec));
    arr.push_back(std::move(x));
  }
  j["labellings"] = std::move(arr);
  if (semantics) j["semantics"] = *semantics;
  return j.dump(2) + "\n";
}

}  // namespace setadf
