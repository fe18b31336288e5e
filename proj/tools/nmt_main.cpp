#include "normalmt/analysis.hpp"
int main() { return 0; }
