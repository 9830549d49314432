#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entronet/json_io.hpp"

namespace entronet::cli {

/// Exit code 0 = holds/solved/provable, 1 = violated/unsolvable/not
/// provable, 2 = input or usage error. The JSON payload always agrees with
/// the exit code through its "verdict" field.
struct CommandResult {
    int exit_code = 0;
    std::string text;
    json_io::Json payload;
};

/// A vector/inequality/group reference is an inline JSON object (starts
/// with '{'), a built-in name ("pg13", "zy-gap"; "ingleton", "zy"), or a
/// file path.
setfn::SetFunction load_vector(const std::string& ref, const Rational& a);
cones::Inequality load_inequality(const std::string& ref, int& n);
groups::SubgroupFamily load_family(const std::string& ref);

CommandResult cmd_check(const std::string& vector_ref, const std::string& family,
                        bool permutations, const Rational& a);
CommandResult cmd_prove(const std::string& inequality_ref, int n);
CommandResult cmd_group_vector(const std::string& group_ref);
CommandResult cmd_solve(const std::string& group_ref, bool emit_network, bool verify);
CommandResult cmd_demo(const std::string& name, const Rational& a);

/// Full argv-style dispatch (without the program name); prints to `out`
/// honoring --json/--quiet and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace entronet::cli
