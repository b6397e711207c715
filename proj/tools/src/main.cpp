#include <iostream>
#include <string>
#include <vector>

#include "vatcli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vatcli::run(args, std::cout, std::cerr);
}
