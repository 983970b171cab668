#include "shadowsim/cli.hpp"

int main(int argc, char** argv) { return shadowsim::cli_main(argc, argv); }
