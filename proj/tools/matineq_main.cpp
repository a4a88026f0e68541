#include "matineq/cli.hpp"

int main(int argc, char** argv) { return matineq::run_cli(argc, argv); }
