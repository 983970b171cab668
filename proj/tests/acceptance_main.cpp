#include <iostream>

#include "shadowsim/acceptance.hpp"

int main() { return shadowsim::print_acceptance(std::cout); }
