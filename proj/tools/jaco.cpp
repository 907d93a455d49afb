#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "jaco/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    jaco::cli::Environment env;
    if (const char* cap = std::getenv("JACO_CAP_EPS")) env.cap_eps = cap;
    return jaco::cli::run(args, std::cin, std::cout, std::cerr, env);
}
