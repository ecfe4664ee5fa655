#include "cli.hpp"

int main(int argc, char** argv) { return combinlab::cli_main(argc, argv); }
