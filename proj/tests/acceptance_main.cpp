#include <iostream>

#include "orthokit/selftest.hpp"

int main() { return orthokit::print_acceptance(std::cout); }
