#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env;
    if (const char* v = std::getenv("MOTIVEC_TRUNCATION"))
        env = v;
    const auto result = motivec::cli::run_args(args, env);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
