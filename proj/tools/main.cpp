#include <iostream>

#include "entronet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return entronet::cli::run(args, std::cout);
}
