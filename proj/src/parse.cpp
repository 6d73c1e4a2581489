#include "avmod/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "avmod/errors.hpp"

namespace avmod {

Algebra algebra_from_name(std::string_view name) {
  if (name == "poly") return Algebra::poly;
  if (name == "weyl") return Algebra::weyl;
  if (name == "vectorfield") return Algebra::vectorfield;
  if (name == "env") return Algebra::env;
  if (name == "smash") return Algebra::smash;
  if (name == "tensor") return Algebra::tensor;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::poly: return "poly";
    case Algebra::weyl: return "weyl";
    case Algebra::vectorfield: return "vectorfield";
    case Algebra::env: return "env";
    case Algebra::smash: return "smash";
    case Algebra::tensor: return "tensor";
  }
  return "?";
}

namespace {

struct Node {
  enum class Kind { number, x, d, sum, neg, product, join, group };
  Node(Kind k, std::size_t p) : kind(k), pos(p) {}
  Kind kind;
  std::size_t pos;
  Rational number = 0;
  std::size_t index = 0;  // zero-based variable index
  int power = 1;
  char op = 0;  // '#' or '@' for join
  std::vector<Node> kids;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Node parse() {
    Node root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_nat() {
    const std::size_t start = pos_;
    const std::string s = digits();
    if (s.size() > 6) throw ParseError("number too large", start);
    return std::stoi(s);
  }

  Node expr() {
    Node sum{Node::Kind::sum, peek_pos()};
    sum.kids.push_back(term(true));
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      sum.kids.push_back(term(true));
    }
    return sum;
  }

  std::size_t peek_pos() {
    skip_space();
    return pos_;
  }

  Node term(bool allow_sign) {
    const std::size_t start = peek_pos();
    bool negative = false;
    if (allow_sign) {
      if (accept('-')) {
        negative = true;
      } else {
        accept('+');
      }
    }
    Node t = product();
    const char c = peek();
    if (c == '#' || c == '@') {
      ++pos_;
      Node join{Node::Kind::join, start};
      join.op = c;
      join.kids.push_back(std::move(t));
      join.kids.push_back(product());
      t = std::move(join);
    }
    if (!negative) return t;
    Node neg{Node::Kind::neg, start};
    neg.kids.push_back(std::move(t));
    return neg;
  }

  Node product() {
    Node prod{Node::Kind::product, peek_pos()};
    prod.kids.push_back(factor());
    while (accept('*')) prod.kids.push_back(factor());
    return prod;
  }

  Node factor() {
    const std::size_t start = peek_pos();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Node g{Node::Kind::group, start};
      g.kids.push_back(expr());
      if (!accept(')')) fail("expected ')'");
      return g;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Node num{Node::Kind::number, start};
      Integer numer(digits());
      Integer denom = 1;
      if (accept('/')) {
        skip_space();
        const std::size_t dpos = pos_;
        denom = Integer(digits());
        if (denom == 0) throw ParseError("zero denominator", dpos);
      }
      num.number = Rational(numer, denom);
      num.number.canonicalize();
      return num;
    }
    if (c == 'x' || c == 'd') {
      ++pos_;
      Node v{c == 'x' ? Node::Kind::x : Node::Kind::d, start};
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail(std::string("expected an index after '") + c + "'");
      }
      const int index = small_nat();
      if (index < 1 || static_cast<std::size_t>(index) > n_) {
        throw ParseError("dimension error: " + std::string(1, c) + std::to_string(index) +
                             " is out of range for n = " + std::to_string(n_),
                         start);
      }
      v.index = static_cast<std::size_t>(index - 1);
      if (accept('^')) {
        skip_space();
        v.power = small_nat();
      }
      return v;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

[[noreturn]] void reject(const Node& node, const std::string& what) { throw ParseError(what, node.pos); }

// Shared traversal. Each mode supplies leaves, products and joins; sums,
// negations and groups are handled here.
template <class Mode>
typename Mode::Value evaluate(const Mode& mode, const Node& node) {
  using Value = typename Mode::Value;
  switch (node.kind) {
    case Node::Kind::sum: {
      Value acc = evaluate(mode, node.kids.front());
      for (std::size_t i = 1; i < node.kids.size(); ++i) acc = mode.add(acc, evaluate(mode, node.kids[i]), node.kids[i]);
      return acc;
    }
    case Node::Kind::neg: return mode.negate(evaluate(mode, node.kids.front()));
    case Node::Kind::group: return evaluate(mode, node.kids.front());
    case Node::Kind::product: return mode.product(node);
    case Node::Kind::join: return mode.join(node);
    default: return mode.leaf(node);
  }
}

template <class Mode>
typename Mode::Value fold_product(const Mode& mode, const Node& node) {
  typename Mode::Value acc = evaluate(mode, node.kids.front());
  for (std::size_t i = 1; i < node.kids.size(); ++i) acc = mode.mul(acc, evaluate(mode, node.kids[i]), node.kids[i]);
  return acc;
}

struct PolyMode {
  using Value = Polynomial;
  std::size_t n;
  Value leaf(const Node& node) const {
    if (node.kind == Node::Kind::number) return Polynomial::constant(n, node.number);
    if (node.kind == Node::Kind::d) reject(node, "'d' is not allowed in a polynomial");
    return poly_pow(Polynomial::variable(n, node.index), static_cast<unsigned>(node.power));
  }
  Value add(const Value& a, const Value& b, const Node&) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b, const Node&) const { return a * b; }
  Value product(const Node& node) const { return fold_product(*this, node); }
  Value join(const Node& node) const { reject(node, std::string("'") + node.op + "' is not allowed in a polynomial"); }
};

struct WeylMode {
  using Value = WeylElement;
  std::size_t n;
  Value leaf(const Node& node) const {
    if (node.kind == Node::Kind::number) return WeylElement::scalar(n, node.number);
    const MultiIndex p = MultiIndex(n).with(node.index, node.power);
    if (node.kind == Node::Kind::x) return WeylElement::word(p, MultiIndex(n));
    return WeylElement::word(MultiIndex(n), p);
  }
  Value add(const Value& a, const Value& b, const Node&) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b, const Node&) const { return a * b; }
  Value product(const Node& node) const { return fold_product(*this, node); }
  Value join(const Node& node) const { reject(node, std::string("'") + node.op + "' is not allowed in a Weyl expression"); }
};

// A vector field, or a polynomial still waiting for its d factor.
struct VfValue {
  bool is_field = false;
  Polynomial f;
  VectorField v;
};

VectorField scale_field(const Polynomial& f, const VectorField& v) {
  VectorField out(v.dim());
  for (const auto& [g, c] : v.terms()) out += VectorField::from_polynomial(f * Polynomial::monomial(g.k, c), g.dir);
  return out;
}

struct VfMode {
  using Value = VfValue;
  std::size_t n;
  Value leaf(const Node& node) const {
    if (node.kind == Node::Kind::number) return {false, Polynomial::constant(n, node.number), VectorField(n)};
    if (node.kind == Node::Kind::x) {
      return {false, poly_pow(Polynomial::variable(n, node.index), static_cast<unsigned>(node.power)), VectorField(n)};
    }
    if (node.power == 0) return {false, Polynomial::constant(n, 1), VectorField(n)};
    if (node.power != 1) reject(node, "d^2 and higher are not vector fields");
    return {true, Polynomial(n), VectorField::generator(VectorFieldGen(MultiIndex(n), node.index))};
  }
  Value add(const Value& a, const Value& b, const Node& at) const {
    if (a.is_field == b.is_field) return {a.is_field, a.f + b.f, a.v + b.v};
    // A zero polynomial is also the zero vector field.
    if (!a.is_field && a.f.is_zero()) return b;
    if (!b.is_field && b.f.is_zero()) return a;
    reject(at, "cannot add a function and a vector field");
  }
  Value negate(const Value& a) const { return {a.is_field, -a.f, -a.v}; }
  Value mul(const Value& a, const Value& b, const Node& at) const {
    if (a.is_field && b.is_field) reject(at, "product of two vector fields is not a vector field");
    if (a.is_field) return {true, Polynomial(n), scale_field(b.f, a.v)};
    if (b.is_field) return {true, Polynomial(n), scale_field(a.f, b.v)};
    return {false, a.f * b.f, VectorField(n)};
  }
  Value product(const Node& node) const { return fold_product(*this, node); }
  Value join(const Node& node) const { reject(node, std::string("'") + node.op + "' is not allowed in a vector field"); }
};

struct EnvMode {
  using Value = EnvElement;
  std::size_t n;
  Value leaf(const Node& node) const {
    if (node.kind == Node::Kind::number) return EnvElement::scalar(n, node.number);
    // A lone factor outside a product still goes through the grouping rule.
    Node prod{Node::Kind::product, node.pos};
    prod.kids.push_back(node);
    return product(prod);
  }
  Value add(const Value& a, const Value& b, const Node&) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value product(const Node& node) const {
    EnvElement acc = EnvElement::unit(n);
    MultiIndex pending(n);
    const Node* pending_at = nullptr;
    for (const Node& f : node.kids) {
      switch (f.kind) {
        case Node::Kind::number:
          if (pending_at) reject(f, "a number cannot follow an open monomial");
          acc = acc * EnvElement::scalar(n, f.number);
          break;
        case Node::Kind::x:
          pending = pending.with(f.index, pending[f.index] + f.power);
          if (!pending_at) pending_at = &f;
          break;
        case Node::Kind::d:
          for (int e = 0; e < f.power; ++e) {
            acc = acc * EnvElement::generator(VectorFieldGen(pending, f.index));
            pending = MultiIndex(n);
          }
          if (f.power > 0) pending_at = nullptr;
          break;
        default:
          if (pending_at) reject(f, "a monomial must be closed by a d factor");
          acc = acc * evaluate(*this, f);
      }
    }
    if (pending_at) reject(*pending_at, "a monomial must be closed by a d factor");
    return acc;
  }
  Value join(const Node& node) const { reject(node, std::string("'") + node.op + "' is not allowed in an env expression"); }
};

EnvElement as_lplus(const EnvElement& u, const Node& at) {
  try {
    return u.restricted();
  } catch (const LplusError&) {
    reject(at, "the right leg of a tensor must lie in U(L+)");
  }
}

struct SmashMode {
  using Value = SmashElement;
  std::size_t n;
  Value leaf(const Node& node) const {
    if (node.kind == Node::Kind::d) return SmashElement::from_env(EnvMode{n}.leaf(node));
    return SmashElement::from_poly(PolyMode{n}.leaf(node));
  }
  Value add(const Value& a, const Value& b, const Node&) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b, const Node&) const { return a * b; }
  Value product(const Node& node) const { return fold_product(*this, node); }
  Value join(const Node& node) const {
    if (node.op != '#') reject(node, "'@' is not allowed in a smash expression");
    return SmashElement::tensor(evaluate(PolyMode{n}, node.kids[0]), evaluate(EnvMode{n}, node.kids[1]));
  }
};

struct TensorMode {
  using Value = TensorElement;
  std::size_t n;
  Value leaf(const Node& node) const {
    return TensorElement::tensor(WeylMode{n}.leaf(node), EnvElement::unit(n, Restriction::lplus));
  }
  Value add(const Value& a, const Value& b, const Node&) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b, const Node&) const { return a * b; }
  Value product(const Node& node) const { return fold_product(*this, node); }
  Value join(const Node& node) const {
    if (node.op != '@') reject(node, "'#' is not allowed in a tensor expression");
    const EnvElement right = as_lplus(evaluate(EnvMode{n}, node.kids[1]), node.kids[1]);
    return TensorElement::tensor(evaluate(WeylMode{n}, node.kids[0]), right);
  }
};

Node parse_tree(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("parse: dimension must be positive");
  return Parser(text, n).parse();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  return evaluate(PolyMode{n}, parse_tree(text, n));
}

WeylElement parse_weyl(std::string_view text, std::size_t n) { return evaluate(WeylMode{n}, parse_tree(text, n)); }

VectorField parse_vector_field(std::string_view text, std::size_t n) {
  const Node root = parse_tree(text, n);
  const VfValue v = evaluate(VfMode{n}, root);
  if (v.is_field) return v.v;
  if (v.f.is_zero()) return VectorField(n);
  reject(root, "expression is a function, not a vector field");
}

EnvElement parse_env(std::string_view text, std::size_t n, Restriction restriction) {
  const Node root = parse_tree(text, n);
  const EnvElement u = evaluate(EnvMode{n}, root);
  return restriction == Restriction::lplus ? as_lplus(u, root) : u;
}

SmashElement parse_smash(std::string_view text, std::size_t n) { return evaluate(SmashMode{n}, parse_tree(text, n)); }

TensorElement parse_tensor(std::string_view text, std::size_t n) {
  return evaluate(TensorMode{n}, parse_tree(text, n));
}

AnyElement parse(std::string_view text, Algebra algebra, std::size_t n) {
  switch (algebra) {
    case Algebra::poly: return parse_polynomial(text, n);
    case Algebra::weyl: return parse_weyl(text, n);
    case Algebra::vectorfield: return parse_vector_field(text, n);
    case Algebra::env: return parse_env(text, n);
    case Algebra::smash: return parse_smash(text, n);
    case Algebra::tensor: return parse_tensor(text, n);
  }
  throw std::invalid_argument("parse: unknown algebra");
}

std::string to_string(const AnyElement& a) {
  return std::visit([](const auto& v) { return to_string(v); }, a);
}

}  // namespace avmod
