#pragma once

#include <string>
#include <variant>
#include <vector>

#include "birkit/maps.hpp"

namespace birkit {

enum class FieldTag { QQ, RR, CC, Qp };

struct FieldSpec {
    FieldTag tag = FieldTag::QQ;
    long long p = 0;  // Qp only
    int prec = 0;     // Qp only

    // "QQ" | "RR" | "CC" | "Qp:<p>:<prec>"
    static FieldSpec parse(const std::string& text);
    std::string str() const;
};

using AnyMapTuple =
    std::variant<RatMapTuple, MapTuple<RealDomain>, CxMapTuple, MapTuple<PadicDomain>>;
using AnyPoint = std::variant<PointVec<RationalDomain>, PointVec<RealDomain>,
                              PointVec<ComplexDomain>, PointVec<PadicDomain>>;

struct MapLiteral {
    std::string source;
    FieldSpec field;
    AnyMapTuple tuple;

    int n() const;
    int degree() const;
};

// Grammar: '[' expr (':' expr)+ ']' with polynomial expressions in x0..xn;
// coefficients are integers, fractions, decimals, a+bi forms, or p-adic
// p^v*(digit sums), all as ordinary arithmetic. Homogeneity and equal
// component degrees are enforced here.
MapLiteral parse_map(const std::string& text, const FieldSpec& field);

// Point literal: '[' const-expr (':' const-expr)+ ']'.
AnyPoint parse_point(const std::string& text, const FieldSpec& field);

// Canonical text form: graded-lex term order, canonical coefficient strings.
std::string print_map(const AnyMapTuple& tuple);
std::string print_map(const RatMapTuple& t);
std::string print_map(const MapTuple<RealDomain>& t);
std::string print_map(const CxMapTuple& t);
std::string print_map(const MapTuple<PadicDomain>& t);

std::string print_point(const AnyPoint& point);

}  // namespace birkit
