#include "egb/problem_io.hpp"

#include "egb/buchberger.hpp"
#include "egb/signature.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace egb {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::buchberger: return "buchberger";
    case Algorithm::incremental: return "incremental";
    case Algorithm::signature: return "signature";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(const std::string& s) {
  if (s == "buchberger") return Algorithm::buchberger;
  if (s == "incremental") return Algorithm::incremental;
  if (s == "signature") return Algorithm::signature;
  return std::nullopt;
}

bool operator==(const Problem& a, const Problem& b) {
  if (!a.ring || !b.ring) return a.ring == b.ring;
  return *a.ring == *b.ring && a.generators == b.generators && a.options == b.options;
}

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      msg_(msg),
      line_(line),
      column_(column) {}

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line_, col_});
        return out;
      }
      const char c = src_[pos_];
      const std::size_t l = line_, k = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          s += advance();
        out.push_back({Tok::ident, s, l, k});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) s += advance();
        out.push_back({Tok::integer, s, l, k});
      } else if (std::string_view("{}[](),;=+-*/^").find(c) != std::string_view::npos) {
        out.push_back({Tok::punct, std::string(1, advance()), l, k});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", l, k);
      }
    }
  }

private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(Lexer(text).run()) {}

  Problem problem() {
    Problem p;
    bool seen_ring = false, seen_gens = false, seen_opts = false;
    while (peek().kind != Tok::end) {
      const Token& t = expect_ident();
      if (t.text == "ring") {
        if (seen_ring) fail("duplicate ring block", t);
        seen_ring = true;
        p.ring = ring_block();
        ring_ = p.ring;
      } else if (t.text == "generators") {
        if (!seen_ring) fail("generators block before ring block", t);
        if (seen_gens) fail("duplicate generators block", t);
        seen_gens = true;
        p.generators = generators_block();
      } else if (t.text == "options") {
        if (seen_opts) fail("duplicate options block", t);
        seen_opts = true;
        p.options = options_block();
      } else {
        fail("unknown block '" + t.text + "'", t);
      }
    }
    if (!seen_ring) fail("missing ring block", peek());
    return p;
  }

  Polynomial lone_expression(RingPtr ring) {
    ring_ = std::move(ring);
    Polynomial f = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after expression", peek());
    return f;
  }

private:
  [[noreturn]] static void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.col);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool accept(const char* punct) {
    if (peek().kind == Tok::punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
  }
  const Token& expect(const char* punct) {
    if (peek().kind != Tok::punct || peek().text != punct)
      fail(std::string("expected '") + punct + "' but found " + describe(peek()), peek());
    return next();
  }
  const Token& expect_ident() {
    if (peek().kind != Tok::ident) fail("expected a name but found " + describe(peek()), peek());
    return next();
  }
  unsigned long expect_uint(unsigned long max) {
    const Token& t = peek();
    if (t.kind != Tok::integer) fail("expected an integer but found " + describe(t), t);
    next();
    if (t.text.size() > 9 || std::stoul(t.text) > max) fail("integer " + t.text + " out of range", t);
    return std::stoul(t.text);
  }
  bool expect_bool() {
    const Token& t = expect_ident();
    if (t.text == "true") return true;
    if (t.text == "false") return false;
    fail("expected true or false", t);
  }
  void end_statement() {
    if (!accept(";") && !(peek().kind == Tok::punct && peek().text == "}"))
      fail("expected ';' but found " + describe(peek()), peek());
  }

  RingPtr ring_block() {
    const Token& open = expect("{");
    std::vector<FamilySpec> families;
    OrderSpec spec;
    while (!accept("}")) {
      const Token& key = expect_ident();
      if (key.text == "family") {
        FamilySpec f;
        f.name = expect_ident().text;
        expect("{");
        while (!accept("}")) {
          const Token& k = expect_ident();
          expect("=");
          if (k.text == "arity") {
            f.arity = static_cast<unsigned>(expect_uint(kMaxArity));
            if (f.arity == 0) fail("arity must be at least 1", k);
          } else if (k.text == "constraint") {
            const Token& v = expect_ident();
            auto c = constraint_from_string(v.text);
            if (!c) fail("unknown constraint '" + v.text + "'", v);
            f.constraint = *c;
          } else if (k.text == "weight") {
            f.weight = static_cast<unsigned>(expect_uint(1000000));
            if (f.weight == 0) fail("weight must be positive", k);
          } else {
            fail("unknown family attribute '" + k.text + "'", k);
          }
          if (!accept(",") && !(peek().kind == Tok::punct && peek().text == "}"))
            fail("expected ',' or '}' but found " + describe(peek()), peek());
        }
        accept(";");
        for (const auto& g : families)
          if (g.name == f.name) fail("duplicate family '" + f.name + "'", key);
        families.push_back(std::move(f));
      } else if (key.text == "field") {
        expect("=");
        const Token& v = expect_ident();
        if (v.text != "QQ") fail("only the rational field QQ is supported", v);
        end_statement();
      } else if (key.text == "order") {
        expect("=");
        const Token& v = expect_ident();
        if (v.text == "lex")
          spec.kind = OrderKind::lex;
        else if (v.text == "grlex")
          spec.kind = OrderKind::grlex;
        else
          fail("unknown order '" + v.text + "'", v);
        end_statement();
      } else if (key.text == "precedence") {
        expect("=");
        spec.family_precedence.push_back(expect_ident().text);
        while (accept(",")) spec.family_precedence.push_back(expect_ident().text);
        end_statement();
      } else if (key.text == "weights") {
        expect("=");
        spec.use_weights = expect_bool();
        end_statement();
      } else {
        fail("unknown ring entry '" + key.text + "'", key);
      }
    }
    if (families.empty()) fail("ring declares no families", open);
    if (spec.family_precedence.empty())
      for (const auto& f : families) spec.family_precedence.push_back(f.name);
    try {
      return std::make_shared<const Ring>(std::move(families), std::move(spec));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), open);
    }
  }

  std::vector<Polynomial> generators_block() {
    expect("{");
    std::vector<Polynomial> out;
    while (!accept("}")) {
      out.push_back(expr());
      end_statement();
    }
    return out;
  }

  ProblemOptions options_block() {
    expect("{");
    ProblemOptions o;
    auto limit = [&]() -> std::optional<std::uint64_t> {
      if (peek().kind == Tok::ident && peek().text == "none") {
        next();
        return std::nullopt;
      }
      return expect_uint(999999999);
    };
    while (!accept("}")) {
      const Token& key = expect_ident();
      expect("=");
      if (key.text == "algorithm") {
        const Token& v = expect_ident();
        auto a = algorithm_from_string(v.text);
        if (!a) fail("unknown algorithm '" + v.text + "'", v);
        o.algorithm = *a;
      } else if (key.text == "max_width") {
        auto v = limit();
        o.limits.max_width = v ? std::optional<Index>(static_cast<Index>(*v)) : std::nullopt;
      } else if (key.text == "max_pairs") {
        o.limits.max_pairs = limit();
      } else if (key.text == "max_basis") {
        auto v = limit();
        o.limits.max_basis = v ? std::optional<std::size_t>(*v) : std::nullopt;
      } else if (key.text == "principal_syzygies") {
        o.principal_syzygies = expect_bool();
      } else if (key.text == "confirm_levels") {
        o.confirm_levels = static_cast<Index>(expect_uint(64));
      } else {
        fail("unknown option '" + key.text + "'", key);
      }
      end_statement();
    }
    return o;
  }

  // expr := term (('+' | '-') term)*
  Polynomial expr() {
    Polynomial f = term();
    while (true) {
      if (accept("+"))
        f = add(f, term());
      else if (accept("-"))
        f = subtract(f, term());
      else
        return f;
    }
  }

  // term := unary (('*' | '/') unary)*
  Polynomial term() {
    Polynomial f = unary();
    while (true) {
      if (accept("*")) {
        f = mul(f, unary());
      } else if (peek().kind == Tok::punct && peek().text == "/") {
        const Token& slash = next();
        Polynomial d = unary();
        if (d.is_zero()) fail("division by zero", slash);
        if (d.size() != 1 || !d.lm().is_one()) fail("division is only by nonzero constants", slash);
        f = scale(f, 1 / d.lc());
      } else {
        return f;
      }
    }
  }

  Polynomial unary() {
    if (accept("-")) return scale(unary(), Coefficient(-1));
    if (accept("+")) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept("^")) return base;
    const auto e = static_cast<std::uint32_t>(expect_uint(kMaxExponent));
    Polynomial out = Polynomial::constant(ring_, Coefficient(1));
    for (std::uint32_t k = 0; k < e; ++k) out = mul(out, base);
    return out;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      next();
      return Polynomial::constant(ring_, Coefficient(mpz_class(t.text)));
    }
    if (accept("(")) {
      Polynomial f = expr();
      expect(")");
      return f;
    }
    if (t.kind == Tok::ident) return variable();
    fail("expected an expression but found " + describe(t), t);
  }

  Polynomial variable() {
    const Token& name = next();
    auto rank = ring_->rank_of(name.text);
    if (!rank) fail("unknown variable family '" + name.text + "'", name);
    expect("[");
    std::vector<Index> idx{static_cast<Index>(expect_uint(1000000))};
    while (accept(",")) idx.push_back(static_cast<Index>(expect_uint(1000000)));
    expect("]");
    try {
      return Polynomial::monomial(ring_, Coefficient(1), Monomial::of(ring_->variable(*rank, idx)));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), name);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

std::string limit_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace

Problem parse_problem(const std::string& text) { return Parser(text).problem(); }

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(text).lone_expression(ring);
}

std::string serialize(const Problem& p) {
  std::ostringstream os;
  os << "ring {\n  field = QQ;\n";
  for (const auto& f : p.ring->declared())
    os << "  family " << f.name << " { arity = " << f.arity << ", constraint = " << to_string(f.constraint)
       << ", weight = " << f.weight << " }\n";
  const auto& spec = p.ring->order_spec();
  os << "  order = " << to_string(spec.kind) << ";\n  precedence = ";
  for (std::size_t k = 0; k < spec.family_precedence.size(); ++k)
    os << (k ? ", " : "") << spec.family_precedence[k];
  os << ";\n  weights = " << (spec.use_weights ? "true" : "false") << ";\n}\n";
  os << "generators {\n";
  for (const auto& g : p.generators) os << "  " << format(g) << ";\n";
  os << "}\n";
  const auto& o = p.options;
  os << "options {\n  algorithm = " << to_string(o.algorithm) << ";\n"
     << "  max_width = " << limit_text(o.limits.max_width) << ";\n"
     << "  max_pairs = " << limit_text(o.limits.max_pairs) << ";\n"
     << "  max_basis = " << limit_text(o.limits.max_basis) << ";\n"
     << "  principal_syzygies = " << (o.principal_syzygies ? "true" : "false") << ";\n"
     << "  confirm_levels = " << o.confirm_levels << ";\n}\n";
  return os.str();
}

std::string serialize_basis(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> sorted;
  for (const auto& g : basis)
    if (!g.is_zero()) sorted.push_back(g.monic());
  sort_for_output(sorted);
  std::string out;
  for (const auto& g : sorted) out += format(g) + "\n";
  return out;
}

SolveOutcome solve(const Problem& p) {
  SolveOutcome out;
  const auto& o = p.options;
  switch (o.algorithm) {
    case Algorithm::buchberger:
      out.result = egb_buchberger(p.generators, o.limits);
      break;
    case Algorithm::incremental:
      out.result = egb_incremental(p.generators, o.limits, {.confirm_levels = o.confirm_levels});
      break;
    case Algorithm::signature: {
      SignatureOptions so;
      so.principal_syzygies = o.principal_syzygies;
      auto run = signature_completion(p.generators, o.limits, so);
      out.result = std::move(run.result);
      out.verified = run.verified;
      break;
    }
  }
  return out;
}

std::string report_json(const Problem& p, const SolveOutcome& outcome, bool include_timing) {
  using nlohmann::json;
  const auto& r = outcome.result;
  const auto& s = r.stats;
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  json stats = {
      {"pairs_generated", s.pairs_generated},   {"pairs_processed", s.pairs_processed},
      {"coprime_skipped", s.coprime_skipped},   {"zero_reductions", s.zero_reductions},
      {"basis_insertions", s.basis_insertions}, {"covered_pairs", s.covered_pairs},
      {"singular_discards", s.singular_discards}, {"syzygies", s.syzygies},
      {"principal_syzygies", s.principal_syzygies}, {"rank", s.rank},
      {"nf_changed", s.nf_changed},             {"levels", s.levels},
      {"final_level", opt(s.final_level)},      {"stabilized_at", opt(s.stabilized_at)},
  };
  if (include_timing) stats["wall_seconds"] = s.wall_seconds;
  json basis = json::array();
  std::istringstream lines(serialize_basis(r.basis));
  for (std::string line; std::getline(lines, line);) basis.push_back(line);
  json report = {
      {"format", "egb-report/1"},
      {"status", to_string(r.status)},
      {"budget_reason", r.budget_reason.empty() ? json(nullptr) : json(r.budget_reason)},
      {"basis", basis},
      {"stats", stats},
      {"verified", opt(outcome.verified)},
      {"options",
       {{"algorithm", to_string(p.options.algorithm)},
        {"max_width", opt(p.options.limits.max_width)},
        {"max_pairs", opt(p.options.limits.max_pairs)},
        {"max_basis", opt(p.options.limits.max_basis)},
        {"principal_syzygies", p.options.principal_syzygies},
        {"confirm_levels", p.options.confirm_levels}}},
  };
  return report.dump(2) + "\n";
}

}  // namespace egb
