#pragma once

// Reference data transcribed from the published figures and tables.

#include <array>
#include <string>
#include <vector>

namespace refdata {

struct TreeFigure {
  long a;
  std::vector<std::string> nodes;
  std::vector<std::array<std::string, 2>> edges;
};

inline const std::vector<TreeFigure> kTreeFigures = {
    {9,
     {"(1,1,1)", "(1,1,4)", "(1,4,25)", "(1,25,169)", "(4,25,841)", "(1,169,1156)", "(25,169,37636)", "(25,841,187489)", "(4,841,28561)"},
     {{"(1,1,1)", "(1,1,4)"}, {"(1,1,4)", "(1,4,25)"}, {"(1,4,25)", "(1,25,169)"}, {"(1,4,25)", "(4,25,841)"}, {"(1,25,169)", "(1,169,1156)"}, {"(1,25,169)", "(25,169,37636)"}, {"(4,25,841)", "(25,841,187489)"}, {"(4,25,841)", "(4,841,28561)"}}},
    {8,
     {"(1,1,2)", "(1,2,9)", "(1,9,50)", "(2,9,121)", "(1,50,289)", "(9,50,3481)", "(2,121,1681)", "(9,121,8450)"},
     {{"(1,1,2)", "(1,2,9)"}, {"(1,2,9)", "(1,9,50)"}, {"(1,2,9)", "(2,9,121)"}, {"(1,9,50)", "(1,50,289)"}, {"(1,9,50)", "(9,50,3481)"}, {"(2,9,121)", "(2,121,1681)"}, {"(2,9,121)", "(9,121,8450)"}}},
    {6,
     {"(1,2,3)", "(2,3,25)", "(1,3,8)", "(3,25,392)", "(2,25,243)", "(3,8,121)", "(1,8,27)", "(1,27,98)", "(8,27,1225)", "(3,121,1922)", "(8,121,5547)", "(2,243,2401)", "(25,243,35912)", "(3,392,6241)", "(25,392,57963)"},
     {{"(1,2,3)", "(2,3,25)"}, {"(1,2,3)", "(1,3,8)"}, {"(2,3,25)", "(3,25,392)"}, {"(2,3,25)", "(2,25,243)"}, {"(1,3,8)", "(3,8,121)"}, {"(1,3,8)", "(1,8,27)"}, {"(1,8,27)", "(1,27,98)"}, {"(1,8,27)", "(8,27,1225)"}, {"(3,8,121)", "(3,121,1922)"}, {"(3,8,121)", "(8,121,5547)"}, {"(2,25,243)", "(2,243,2401)"}, {"(2,25,243)", "(25,243,35912)"}, {"(3,25,392)", "(3,392,6241)"}, {"(3,25,392)", "(25,392,57963)"}}},
    {5,
     {"(1,4,5)", "(1,5,9)", "(4,5,81)", "(1,9,20)", "(5,9,196)", "(4,81,1445)", "(5,81,1849)", "(81,1849,744980)", "(5,1849,42436)", "(81,1445,582169)", "(4,1445,25921)", "(9,196,8405)", "(5,196,4489)", "(9,20,841)", "(1,20,49)"},
     {{"(1,4,5)", "(1,5,9)"}, {"(1,4,5)", "(4,5,81)"}, {"(1,5,9)", "(1,9,20)"}, {"(1,5,9)", "(5,9,196)"}, {"(4,5,81)", "(4,81,1445)"}, {"(4,5,81)", "(5,81,1849)"}, {"(5,81,1849)", "(81,1849,744980)"}, {"(5,81,1849)", "(5,1849,42436)"}, {"(4,81,1445)", "(81,1445,582169)"}, {"(4,81,1445)", "(4,1445,25921)"}, {"(5,9,196)", "(9,196,8405)"}, {"(5,9,196)", "(5,196,4489)"}, {"(1,9,20)", "(9,20,841)"}, {"(1,9,20)", "(1,20,49)"}}},
};

struct FigureEdge {
  std::string from, to;
  bool red;
};
struct GraphFigure {
  std::string name;
  long a, mu;
  std::vector<long> etas;
  std::vector<std::string> nodes;
  std::vector<FigureEdge> edges;
};

inline const std::vector<GraphFigure> kGraphFigures = {
    {"2-3-1", 2, 3, {1},
     {"(1,2,3; 1)", "(1,8,3; 1)", "(25,2,3; 1)", "(1,8,27; 1)", "(121,8,3; 1)", "(25,2,243; 1)", "(25,392,3; 1)", "(1,98,27; 1)", "(1225,8,27; 1)", "(121,8,5547; 1)", "(121,1922,3; 1)", "(25,35912,243; 1)", "(2401,2,243; 1)", "(25,392,57963; 1)", "(6241,392,3; 1)"},
     {{"(1,8,3; 1)", "(1,8,27; 1)", false},
      {"(25,2,3; 1)", "(25,2,243; 1)", false},
      {"(121,8,3; 1)", "(121,8,5547; 1)", false},
      {"(25,392,3; 1)", "(25,392,57963; 1)", false}}},
    {"1-6-1", 1, 6, {1},
     {"(1,2,3; 1)", "(1,8,3; 1)", "(25,2,3; 1)", "(1,8,27; 1)", "(121,8,3; 1)", "(25,2,243; 1)", "(25,392,3; 1)", "(1,98,27; 1)", "(1225,8,27; 1)", "(121,8,5547; 1)", "(121,1922,3; 1)", "(25,35912,243; 1)", "(2401,2,243; 1)", "(25,392,57963; 1)", "(6241,392,3; 1)"},
     {{"(1,8,3; 1)", "(1,8,27; 1)", false},
      {"(25,2,3; 1)", "(25,2,243; 1)", false},
      {"(121,8,3; 1)", "(121,8,5547; 1)", false},
      {"(25,392,3; 1)", "(25,392,57963; 1)", false}}},
    {"T(1,8)", 1, 8, {3, 7},
     {"(1,1,2; 3)", "(1,9,2; 3)", "(1,9,2; 7)", "(1,9,50; 3)", "(1,9,50; 7)", "(9,121,2; 3)", "(9,121,2; 7)", "(1,289,50; 3)", "(1,289,50; 7)", "(9,3481,50; 3)", "(9,3481,50; 7)", "(9,121,8450; 3)", "(9,121,8450; 7)", "(121,1681,2; 3)", "(121,1681,2; 7)", "(1,289,1682; 3)", "(1,289,1682; 7)", "(289,114921,50; 3)", "(289,114921,50; 7)", "(9,3481,243602; 3)", "(9,3481,243602; 7)", "(3481,1385329,50; 3)", "(3481,1385329,50; 7)", "(9,591361,8450; 3)", "(9,591361,8450; 7)", "(121,8162449,8450; 3)", "(121,8162449,8450; 7)", "(121,1681,1623602; 3)", "(121,1681,1623602; 7)", "(1681,23409,2; 3)", "(1681,23409,2; 7)"},
     {{"(1,1,2; 3)", "(1,9,2; 3)", false},
      {"(1,1,2; 3)", "(1,9,2; 7)", false},
      {"(1,9,2; 3)", "(1,9,50; 3)", false},
      {"(1,9,2; 7)", "(1,9,50; 7)", false},
      {"(1,9,2; 3)", "(9,121,2; 7)", true},
      {"(1,9,2; 7)", "(9,121,2; 3)", true},
      {"(1,9,50; 3)", "(1,289,50; 3)", false},
      {"(1,9,50; 7)", "(1,289,50; 7)", false},
      {"(1,9,50; 3)", "(9,3481,50; 7)", true},
      {"(1,9,50; 7)", "(9,3481,50; 3)", true},
      {"(9,121,2; 3)", "(9,121,8450; 3)", false},
      {"(9,121,2; 7)", "(9,121,8450; 7)", false},
      {"(9,121,2; 3)", "(121,1681,2; 7)", true},
      {"(9,121,2; 7)", "(121,1681,2; 3)", true},
      {"(1,289,50; 3)", "(1,289,1682; 3)", false},
      {"(1,289,50; 7)", "(1,289,1682; 7)", false},
      {"(1,289,50; 3)", "(289,114921,50; 7)", true},
      {"(1,289,50; 7)", "(289,114921,50; 3)", true},
      {"(9,3481,50; 3)", "(9,3481,243602; 3)", false},
      {"(9,3481,50; 7)", "(9,3481,243602; 7)", false},
      {"(9,3481,50; 3)", "(3481,1385329,50; 7)", true},
      {"(9,3481,50; 7)", "(3481,1385329,50; 3)", true},
      {"(9,121,8450; 3)", "(9,591361,8450; 3)", false},
      {"(9,121,8450; 7)", "(9,591361,8450; 7)", false},
      {"(9,121,8450; 3)", "(121,8162449,8450; 7)", true},
      {"(9,121,8450; 7)", "(121,8162449,8450; 3)", true},
      {"(121,1681,2; 3)", "(121,1681,1623602; 3)", false},
      {"(121,1681,2; 7)", "(121,1681,1623602; 7)", false},
      {"(121,1681,2; 3)", "(1681,23409,2; 7)", true},
      {"(121,1681,2; 7)", "(1681,23409,2; 3)", true}}},
    {"1-8-1", 1, 8, {1},
     {"(1,1,2; 1)", "(1,9,2; 1)", "(1,9,50; 1)", "(9,121,2; 1)", "(1,289,50; 1)", "(9,3481,50; 1)", "(9,121,8450; 1)", "(121,1681,2; 1)", "(1,289,1682; 1)", "(289,114921,50; 1)", "(9,3481,243602; 1)", "(3481,1385329,50; 1)", "(9,591361,8450; 1)", "(121,8162449,8450; 1)", "(121,1681,1623602; 1)", "(1681,23409,2; 1)"},
     {{"(1,9,2; 1)", "(1,9,50; 1)", false},
      {"(9,121,2; 1)", "(9,121,8450; 1)", false},
      {"(1,289,50; 1)", "(1,289,1682; 1)", false},
      {"(9,3481,50; 1)", "(9,3481,243602; 1)", false},
      {"(121,1681,2; 1)", "(121,1681,1623602; 1)", false}}},
    {"1-8-5", 1, 8, {5},
     {"(1,1,2; 5)", "(1,9,2; 5)", "(1,9,50; 5)", "(9,121,2; 5)", "(1,289,50; 5)", "(9,3481,50; 5)", "(9,121,8450; 5)", "(121,1681,2; 5)", "(1,289,1682; 5)", "(289,114921,50; 5)", "(9,3481,243602; 5)", "(3481,1385329,50; 5)", "(9,591361,8450; 5)", "(121,8162449,8450; 5)", "(121,1681,1623602; 5)", "(1681,23409,2; 5)"},
     {{"(1,9,2; 5)", "(1,9,50; 5)", false},
      {"(9,121,2; 5)", "(9,121,8450; 5)", false},
      {"(1,289,50; 5)", "(1,289,1682; 5)", false},
      {"(9,3481,50; 5)", "(9,3481,243602; 5)", false},
      {"(121,1681,2; 5)", "(121,1681,1623602; 5)", false}}},
    {"1-5-1", 1, 5, {1},
     {"(1,4,5; 1)", "(1,9,5; 1)", "(4,81,5; 1)", "(1,9,20; 1)", "(9,196,5; 1)", "(4,81,1445; 1)", "(81,1849,5; 1)", "(1,49,20; 1)", "(9,841,20; 1)", "(9,196,8405; 1)", "(196,4489,5; 1)", "(4,25921,1445; 1)", "(81,582169,1445; 1)", "(81,1849,744980; 1)", "(1849,42436,5; 1)"},
     {{"(1,9,5; 1)", "(1,9,20; 1)", false},
      {"(4,81,5; 1)", "(4,81,1445; 1)", false},
      {"(9,196,5; 1)", "(9,196,8405; 1)", false},
      {"(81,1849,5; 1)", "(81,1849,744980; 1)", false}}},
    {"1-5-2/1-5-3", 1, 5, {2, 3},
     {"(1,4,5; 2)", "(1,4,5; 3)", "(1,9,5; 2)", "(1,9,5; 3)", "(4,81,5; 2)", "(4,81,5; 3)", "(1,9,20; 2)", "(1,9,20; 3)", "(9,196,5; 2)", "(9,196,5; 3)", "(4,81,1445; 2)", "(4,81,1445; 3)", "(81,1849,5; 2)", "(81,1849,5; 3)", "(1,49,20; 2)", "(1,49,20; 3)", "(9,841,20; 2)", "(9,841,20; 3)", "(9,196,8405; 2)", "(9,196,8405; 3)", "(196,4489,5; 2)", "(196,4489,5; 3)", "(4,25921,1445; 2)", "(4,25921,1445; 3)", "(81,582169,1445; 2)", "(81,582169,1445; 3)", "(81,1849,744980; 2)", "(81,1849,744980; 3)", "(1849,42436,5; 2)", "(1849,42436,5; 3)"},
     {{"(1,4,5; 2)", "(1,4,5; 3)", true},
      {"(1,9,5; 2)", "(1,9,20; 3)", true},
      {"(1,9,5; 3)", "(1,9,20; 2)", true},
      {"(4,81,5; 2)", "(4,81,1445; 3)", true},
      {"(4,81,5; 3)", "(4,81,1445; 2)", true},
      {"(9,196,5; 2)", "(9,196,8405; 3)", true},
      {"(9,196,5; 3)", "(9,196,8405; 2)", true},
      {"(81,1849,5; 2)", "(81,1849,744980; 3)", true},
      {"(81,1849,5; 3)", "(81,1849,744980; 2)", true}}},
};

struct PrintedPair {
  long a, mu;
  std::array<std::array<long, 3>, 2> P;
  std::array<long, 3> u, eta;
};

inline const std::vector<PrintedPair> kPrintedPairs = {
    {9, 1, {{{1, 1, -2}, {0, 1, -1}}}, {1, 1, 1}, {0, 0, 0}},
    {8, 1, {{{1, 1, -1}, {0, -2, 1}}}, {1, 1, 2}, {0, 0, 0}},
    {6, 1, {{{1, 1, -1}, {0, -3, 2}}}, {1, 2, 3}, {0, 0, 0}},
    {5, 1, {{{1, 1, -1}, {0, -5, 4}}}, {1, 4, 5}, {0, 0, 0}},
    {4, 2, {{{1, 1, -1}, {0, -4, 2}}}, {1, 1, 2}, {0, 1, 1}},
    {3, 3, {{{1, 1, -1}, {0, -3, 3}}}, {1, 1, 1}, {0, 1, 2}},
    {3, 2, {{{1, 1, -1}, {0, -6, 4}}}, {1, 2, 3}, {0, 1, 1}},
    {2, 4, {{{1, 1, -1}, {0, -8, 4}}}, {1, 1, 2}, {0, 1, 1}},
    {2, 4, {{{2, 2, -3}, {1, -3, 1}}}, {1, 1, 2}, {0, 1, 3}},
    {2, 3, {{{1, 1, -1}, {0, -9, 6}}}, {1, 2, 3}, {0, 1, 1}},
    {2, 3, {{{3, 3, -3}, {1, -2, 1}}}, {1, 2, 3}, {0, 1, 2}},
    {1, 9, {{{3, 3, -6}, {1, -2, 1}}}, {1, 1, 1}, {0, 1, 2}},
    {1, 8, {{{1, 1, -1}, {0, -16, 8}}}, {1, 1, 2}, {0, 1, 1}},
    {1, 8, {{{4, 4, -4}, {1, -3, 1}}}, {1, 1, 2}, {0, 1, 3}},
    {1, 8, {{{2, 2, -2}, {0, -7, 3}}}, {1, 1, 2}, {0, 1, 5}},
    {1, 6, {{{1, 1, -1}, {0, -18, 12}}}, {1, 2, 3}, {0, 1, 1}},
    {1, 6, {{{3, 3, -3}, {2, -4, 2}}}, {1, 2, 3}, {0, 1, 5}},
    {1, 5, {{{1, 1, -1}, {0, -25, 20}}}, {1, 4, 5}, {0, 1, 1}},
    {1, 5, {{{5, 5, -5}, {3, -2, 1}}}, {1, 4, 5}, {0, 1, 2}},
    {1, 5, {{{5, 5, -5}, {1, -4, 3}}}, {1, 4, 5}, {0, 1, 3}},
    {1, 5, {{{5, 5, -5}, {2, -3, 2}}}, {1, 4, 5}, {0, 1, 4}},
};

struct TableRow {
  std::string id;
  std::vector<std::string> constellations;
  std::string t_flags;
};

inline const std::vector<TableRow> kSingularityTable = {
    {"9-1-0", {"(x0,x1,x2)"}, "(+,+,+)"},
    {"8-1-0", {"(x0,x1,x2)"}, "(+,+,+)"},
    {"6-1-0", {"(x0,x1,x2)"}, "(+,+,+)"},
    {"5-1-0", {"(x0,x1,x2)"}, "(+,+,+)"},
    {"4-2-1", {"(x0,x1,x2)"}, "(+,+,+)"},
    {"3-3-2", {"(x0,x1,x2)"}, "(+,+,+)"},
    {"3-2-1", {"(x0,2x1,x2)"}, "(+,+,+)"},
    {"2-4-1", {"(2x0,2x1,x2)"}, "(+,+,+)"},
    {"2-4-3", {"(x0,x1,2x2)"}, "(+,+,+)"},
    {"2-3-1", {"(3x0,3x1,3x2)", "(3x0,3x1,x2)"}, "(-,-,+)"},
    {"2-3-2", {"(x0,x1,3x2)"}, "(+,+,+)"},
    {"1-9-2", {"(3x0,x1,3x2)", "(3x0,3x1,x2)"}, "(+,+,+)"},
    {"1-9-5", {"(3x0,x1,3x2)", "(3x0,3x1,x2)"}, "(+,+,+)"},
    {"1-9-8", {"(x0,3x1,3x2)"}, "(+,+,+)"},
    {"1-8-1", {"(4x0,4x1,x2)", "(4x0,4x1,2x2)"}, "(-,-,+)"},
    {"1-8-3", {"(2x0,x1,4x2)"}, "(+,+,+)"},
    {"1-8-5", {"(4x0,4x1,x2)", "(4x0,4x1,2x2)"}, "(-,-,+)"},
    {"1-8-7", {"(x0,2x1,4x2)"}, "(+,+,+)"},
    {"1-6-1", {"(3x0,6x1,x2)", "(3x0,6x1,3x2)"}, "(-,-,+)"},
    {"1-6-5", {"(x0,2x1,3x2)"}, "(+,+,+)"},
    {"1-5-1", {"(5x0,5x1,x2)", "(5x0,5x1,5x2)"}, "(-,-,+)"},
    {"1-5-2", {"(5x0,5x1,x2)", "(5x0,5x1,5x2)"}, "(-,-,+)"},
    {"1-5-3", {"(5x0,5x1,x2)", "(5x0,5x1,5x2)"}, "(-,-,+)"},
    {"1-5-4", {"(x0,x1,5x2)"}, "(+,+,+)"},
};

}  // namespace refdata
