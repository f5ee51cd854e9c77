# -*- coding: utf-8 -*-
#
# hitchin-toolkit documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('../../'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

import openstackdocstheme  # noqa

html_theme = 'openstackdocs'
html_theme_path = [openstackdocstheme.get_html_theme_path()]

# Must set this variable to include year, month, day, hours, and minutes.
html_last_updated_fmt = '%Y-%m-%d %H:%M'

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'hitchin-toolkit'
copyright = u'2026, The hitchin-toolkit Authors'

exclude_patterns = []

pygments_style = 'sphinx'

modindex_common_prefix = ["hitchin_toolkit."]

# -- Options for HTML output ---------------------------------------------------

htmlhelp_basename = 'hitchintoolkitdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    ('index', 'hitchin-toolkit.tex', u'hitchin-toolkit Documentation',
     u'The hitchin-toolkit Authors', 'manual'),
]
