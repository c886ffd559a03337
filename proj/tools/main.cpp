#include <iostream>
#include <string>
#include <vector>

#include "signed_spectra/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return signed_spectra::run_cli(std::move(args), std::cout, std::cerr);
}
