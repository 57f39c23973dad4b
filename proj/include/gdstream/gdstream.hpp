#pragma once

#include "gdstream/compare.hpp"
#include "gdstream/dataset.hpp"
#include "gdstream/descriptor.hpp"
#include "gdstream/errors.hpp"
#include "gdstream/gabe.hpp"
#include "gdstream/generators.hpp"
#include "gdstream/graph.hpp"
#include "gdstream/harness.hpp"
#include "gdstream/maeve.hpp"
#include "gdstream/oracle.hpp"
#include "gdstream/patterns.hpp"
#include "gdstream/reservoir.hpp"
#include "gdstream/vertex_features.hpp"
