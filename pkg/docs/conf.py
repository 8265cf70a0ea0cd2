# -*- coding: utf-8 -*-
#
# weldedknots documentation build configuration file.

extensions = [
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'

project = 'weldedknots'
copyright = '2026, weldedknots developers'
author = 'weldedknots developers'

version = '0.2'
release = '0.2'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- HTML output ----------------------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'weldedknotsdoc'

# -- Man page output ------------------------------------------------------

man_pages = [
    (master_doc, 'weldedknots', 'weldedknots Documentation',
     [author], 1)
]
