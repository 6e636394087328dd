#include <iostream>
#include <string>
#include <vector>

#include "nomfix/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = false;
    nomfix::Report r = nomfix::run_cli(args, &json);
    std::string text = nomfix::render(r, json);
    (r.exit_code == 2 && !json ? std::cerr : std::cout) << text;
    return r.exit_code;
}
