#include <iostream>
#include <string>
#include <vector>

#include "corefactor/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return corefactor::cli_dispatch(args, std::cout, std::cerr);
}
