#include "subshift/cli.hpp"

int main(int argc, char** argv) { return subshift::run_cli(argc, argv); }
