// Copyright 2026 The catmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATMINE_INGEST_WIKITABLE_H_
#define CATMINE_INGEST_WIKITABLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "catmine/ingest/raw_table.h"

// Minimal reader for MediaWiki table markup.
//
// Handles "{| class=..." blocks with "|+" captions, "|-" row separators,
// "!"/"!!" header cells and "|"/"||" data cells, plus per-cell attributes
// ("style=... | text"). Cell text is reduced to plain text: [[Target|Label]]
// becomes Label, [[Target]] becomes Target, [url label] becomes label, and
// templates, <ref> tags, other HTML tags and bold/italic quotes are removed.
// Row and column spans are not expanded; tables using them usually come out
// ragged and are skipped.
namespace catmine::ingest {

// Reduces a fragment of inline markup to plain text.
std::string StripInlineMarkup(std::string_view markup);

// Extracts every wikitable ("class" containing "wikitable") of one page.
// Blocks that are unterminated, nested, lack a header row or have rows of
// the wrong width are skipped and reported in `warnings`. Table ids are
// "<page_title>#<n>", numbering the page's wikitables from 1.
std::vector<RawTable> ParseWikitables(std::string_view markup,
                                      std::string_view page_title,
                                      std::vector<Warning>* warnings);

// Splits a multi-page wikitext file into pages. A line "<title>X</title>"
// starts page X; text before the first such line belongs to
// `default_title`.
struct WikiPage {
  std::string title;
  std::string text;
};
std::vector<WikiPage> SplitWikiPages(std::string_view text,
                                     std::string_view default_title);

// Emits markup that ParseWikitables reads back into the same headers, rows,
// caption and sortable flag. Cells must not contain markup characters.
std::string SerializeWikitable(const RawTable& table);

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_WIKITABLE_H_
