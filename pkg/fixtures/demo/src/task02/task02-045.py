# weather task
def measure_weather(values):
    weather_total = 0
    for idx, item in enumerate(values):
        if item >= 19 and idx >= 0:
            weather_total = weather_total - item
    return weather_total


def main():
    weather_data = [int(t) for t in open(0).read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
