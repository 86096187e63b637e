#include "semitop/expression.hpp"

#include <cctype>
#include <string>

#include "semitop/constructions.hpp"

namespace semitop {

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      FiniteSemigroup parse() {
        auto s = expr();
        skip();
        if (_pos != _text.size()) {
          throw ParseError(_pos, "unexpected trailing input");
        }
        return s;
      }

     private:
      void skip() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      void expect(char c) {
        skip();
        if (_pos >= _text.size() || _text[_pos] != c) {
          throw ParseError(_pos, std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      std::size_t integer() {
        skip();
        std::size_t const start = _pos;
        std::size_t       value = 0;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          value = value * 10 + static_cast<std::size_t>(_text[_pos] - '0');
          if (value > 100000) {
            throw ParseError(start, "integer argument too large");
          }
          ++_pos;
        }
        if (_pos == start) {
          throw ParseError(start, "expected an integer");
        }
        return value;
      }

      std::string identifier() {
        skip();
        std::size_t const start = _pos;
        while (_pos < _text.size() && std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (_pos == start) {
          throw ParseError(start, "expected a constructor name");
        }
        return std::string(_text.substr(start, _pos - start));
      }

      FiniteSemigroup expr() {
        std::size_t const start = (skip(), _pos);
        auto const        name  = identifier();
        expect('(');
        FiniteSemigroup result;
        if (name == "RB") {
          auto a = integer();
          expect(',');
          auto b = integer();
          if (a == 0 || b == 0) {
            throw ParseError(start, "RB needs positive dimensions");
          }
          result = rectangular_band(a, b);
        } else if (name == "C") {
          auto n = integer();
          if (n == 0) {
            throw ParseError(start, "C needs a positive order");
          }
          result = cyclic_group(n);
        } else if (name == "S" || name == "M") {
          auto n = integer();
          if (n < 2) {
            throw ParseError(start, name + " needs n >= 2");
          }
          auto moore = moore_semigroup(static_cast<std::uint32_t>(n));
          result     = name == "S" ? std::move(moore.s) : std::move(moore.m);
        } else if (name == "J") {
          result = suspension_monoid(expr());
        } else if (name == "I") {
          result = adjoin_identity(expr());
        } else if (name == "Z") {
          result = adjoin_zero(expr());
        } else if (name == "W" || name == "P") {
          auto lhs = expr();
          expect(',');
          auto rhs = expr();
          result   = name == "W" ? wedge_monoid(lhs, rhs).monoid : direct_product(lhs, rhs);
        } else {
          throw ParseError(start, "unknown constructor '" + name + "'");
        }
        expect(')');
        return result;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  FiniteSemigroup parse_expression(std::string_view text) {
    return Parser(text).parse();
  }

}  // namespace semitop
