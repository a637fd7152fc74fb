// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "kgprof/class_detail.hpp"
#include "kgprof/dataset_index.hpp"
#include "kgprof/expressivity.hpp"
#include "kgprof/gold_links.hpp"
#include "kgprof/heatmap.hpp"
#include "kgprof/hierarchy.hpp"
#include "kgprof/json_io.hpp"
#include "kgprof/labels.hpp"
#include "kgprof/linker.hpp"
#include "kgprof/manifest.hpp"
#include "kgprof/metrics.hpp"
#include "kgprof/normalize.hpp"
#include "kgprof/ntriples.hpp"
#include "kgprof/overlap.hpp"
#include "kgprof/partition.hpp"
#include "kgprof/similarity.hpp"
#include "kgprof/snapshot.hpp"
#include "kgprof/sunburst.hpp"
#include "kgprof/term.hpp"
#include "kgprof/vocab.hpp"
