#include "qdeform/cli.hpp"

int main(int argc, char** argv) { return qdeform::run_cli(argc, argv); }
