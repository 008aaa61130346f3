#pragma once

#include <string>
#include <vector>

#include "chebykit/analytic.hpp"
#include "chebykit/exactcore.hpp"
#include "chebykit/gf2m.hpp"
#include "chebykit/padic.hpp"
#include "chebykit/unram.hpp"
#include "json.hpp"

namespace chebykit::cli {

using Json = nlohmann::json;

enum class Status { ok = 0, domain_error = 1, nonconvergence = 2, undecided = 3 };

struct CommandResult {
    Status status = Status::ok;
    Json payload;      // JSON document (error object on failure)
    std::string text;  // raw output (CSV, help) printed instead of the payload when set

    int exit_code() const { return static_cast<int>(status); }
    std::string output() const;  // what goes to stdout or stderr
};

std::string status_name(Status s);

// argv without the program name.
CommandResult run(const std::vector<std::string>& argv);

// Default p-adic precision: CHEBYKIT_PREC when set and positive, else 64.
long default_precision();

// Parsers shared with the serializers.
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);  // "a", "a/b" or a finite decimal
Complex parse_complex(const std::string& s);  // "re", "re,im" or "[re,im]"

// JSON codecs; every from_json inverts the matching to_json.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);
Json bipoly_to_json(const BiPolynomial& p);
BiPolynomial bipoly_from_json(const Json& j);
Json expansion_to_json(const ChebExpansion& e);
ChebExpansion expansion_from_json(const Json& j);
Json padic_to_json(const PAdicNumber& x);
PAdicNumber padic_from_json(const Json& j);
Json gf_to_json(const GF2mElement& a);
GF2mElement gf_from_json(const Json& j);
Json report_to_json(const RamificationReport& r);
RamificationReport report_from_json(const Json& j);

}  // namespace chebykit::cli
