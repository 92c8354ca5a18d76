#pragma once

#include "harmonia/poly.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonia {

/// Exchange format for one polynomial.  Field order 0 means rational coefficients; otherwise
/// coefficients are coordinate vectors in Q(zeta_order).
struct PolyDocument {
    std::vector<std::string> vars;
    int field_order = 0;
    std::vector<std::pair<std::vector<int>, std::string>> terms;  // (exponents, coefficient)
    nlohmann::json metadata = nlohmann::json::object();

    nlohmann::json to_json() const;
    static PolyDocument from_json(const nlohmann::json& j);
};

PolyDocument make_document(const QPoly& p, std::vector<std::string> vars);
PolyDocument make_document(const Poly<Cyclo>& p, std::vector<std::string> vars, int field_order);

/// Polynomial of a document over F; rational documents are accepted for cyclotomic F.
template <class F>
Poly<F> document_poly(const PolyDocument& d);

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitUnsupported = 3 };

/// Parses "1" or "1,0"; a single value is broadcast to every reflection class.
std::vector<long> parse_multiplicity(const std::string& text, std::size_t classes);

/// Worker count from HARMONIA_THREADS, defaulting to the hardware concurrency.
unsigned thread_count();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmonia
