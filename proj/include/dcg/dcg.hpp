#pragma once

#include "dcg/abelian.hpp"
#include "dcg/classify.hpp"
#include "dcg/cohomology.hpp"
#include "dcg/error.hpp"
#include "dcg/extensions.hpp"
#include "dcg/families.hpp"
#include "dcg/graph.hpp"
#include "dcg/graph_iso.hpp"
#include "dcg/group.hpp"
#include "dcg/limits.hpp"
#include "dcg/morphisms.hpp"
#include "dcg/report.hpp"
#include "dcg/residue.hpp"
#include "dcg/spec_lang.hpp"
#include "dcg/subgroups.hpp"
#include "dcg/table_io.hpp"
