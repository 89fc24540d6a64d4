#include <iostream>

#include "rfrac/app.hpp"

int main(int argc, char** argv) { return rfrac::cli::main_entry(argc, argv, std::cout, std::cerr); }
