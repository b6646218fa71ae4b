#include <iostream>
#include <string>
#include <vector>

#include "flagrep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return flagrep::cli::main_entry(args, std::cout, std::cerr);
}
