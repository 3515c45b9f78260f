#include <iostream>
#include <string>
#include <vector>

#include "sos/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sos::run_cli(args, std::cout, std::cerr);
}
