#include "etaforms/cli.hpp"

int main(int argc, char** argv) { return etaforms::cli::run(argc, argv); }
