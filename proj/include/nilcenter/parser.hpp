#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilcenter/model.hpp"

namespace nilcenter {

/// System file grammar:
///   file   := header? eqn eqn eqn
///   header := "params" ident ("," ident)* ";" ("order" INT ";")?
///   eqn    := ("dx" | "dy" | "dz") "=" expr ";"
/// Expressions use + - * / ^ with integer exponents, parentheses, integer
/// literals and declared parameters; division only by x,y,z-free factors.
/// "#" starts a comment. Without an order line the fields are exact
/// polynomials and the analysis order defaults to 12.
SystemModel parse_system(const std::string& text);
SystemModel load_system(const std::string& path);

/// Inverse of parse_system.
std::string print_system(const SystemModel& s);

/// Parses an expression in the given parameters only (no x, y, z).
Coef parse_coefficient(const std::string& text, const std::vector<std::string>& params);

/// Parses "expr<0", "expr>0" or "expr!=0".
SideCondition parse_assumption(const std::string& text, const std::vector<std::string>& params);

/// Parses "k=v,k2=v2" where each value is an expression in params.
std::map<std::string, Coef> parse_assignments(const std::string& text, const std::vector<std::string>& params);

/// Parses a polynomial in x, y, z and the given parameters.
Poly3 parse_polynomial(const std::string& text, const std::vector<std::string>& params);

}  // namespace nilcenter
