// placeholder: suite added alongside its module
