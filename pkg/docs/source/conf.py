# -*- coding: utf-8 -*-
#
# hiwalks documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.coverage',
    'sphinx.ext.imgmath',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'hiwalks'
copyright = u'2026, the hiwalks developers'
author = u'the hiwalks developers'

version = u'0.1.0'
release = u'0.1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# Napoleon reads the Google-style sections; ``Contents`` blocks are plain
# field lists.
napoleon_google_docstring = True
napoleon_numpy_docstring = False

html_theme = 'alabaster'
html_static_path = []
html_extra_path = ['tree_schema.json']
htmlhelp_basename = 'hiwalksdoc'

latex_documents = [
    (master_doc, 'hiwalks.tex', u'hiwalks Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'hiwalks', u'hiwalks Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'hiwalks', u'hiwalks Documentation',
     author, 'hiwalks', 'Higher-dimensional walks on countable ordinals.',
     'Miscellaneous'),
]
