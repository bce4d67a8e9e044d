#include <iostream>

#include "galcoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto r = galcoh::cli::run(args);
    std::cout << galcoh::cli::render(r);
    if (r.exit_code == galcoh::cli::kUsage) std::cerr << galcoh::cli::usage();
    return r.exit_code;
}
